#include "asw/zq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "asw/error.hpp"

namespace asw {

namespace {

constexpr std::int64_t kLiftBound = std::int64_t{1} << 28;

struct Registry {
  std::mutex mutex;
  std::map<std::pair<const FqField*, unsigned>, std::unique_ptr<ZqRing>> rings;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

unsigned max_lift_precision(unsigned p) {
  unsigned m = 0;
  std::int64_t v = 1;
  while (v * p < kLiftBound) {
    v *= p;
    ++m;
  }
  return m;
}

const ZqRing& ZqRing::get(const FqField& field, unsigned precision) {
  if (precision < 1) throw DomainError("lift precision M must be >= 1");
  if (precision > max_lift_precision(field.characteristic()))
    throw DomainError("lift precision M=" + std::to_string(precision) + " too large for p=" +
                      std::to_string(field.characteristic()));
  if (field.degree() > kMaxLiftDegree) throw DomainError("extension degree too large for lifting");
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  auto key = std::make_pair(&field, precision);
  auto it = r.rings.find(key);
  if (it != r.rings.end()) return *it->second;
  auto ring = std::unique_ptr<ZqRing>(new ZqRing(field, precision));
  const ZqRing& ref = *ring;
  r.rings.emplace(key, std::move(ring));
  return ref;
}

ZqRing::ZqRing(const FqField& field, unsigned precision) : field_(&field), precision_(precision), pm_(1) {
  for (unsigned k = 0; k < precision; ++k) pm_ *= field.characteristic();
  for (unsigned c : field.modulus()) lifted_modulus_.push_back(c);
  // omega(x) = lim lift(x)^{q^k}; q^{M-1} already fixes all M digits.
  teichmuller_.reserve(field.order());
  for (const FqElem& x : field.elements()) {
    ZqElem y = lift(x);
    for (unsigned k = 1; k < precision; ++k) y = y.pow(field.order());
    teichmuller_.push_back(y);
  }
}

ZqElem ZqRing::from_integer(std::int64_t k) const {
  ZqElem r(*this);
  r.c_[0] = mod(k);
  return r;
}

ZqElem ZqRing::from_coordinates(const std::vector<std::int64_t>& coords) const {
  if (coords.size() > degree()) throw DomainError("too many coordinates for lift element");
  ZqElem r(*this);
  for (std::size_t k = 0; k < coords.size(); ++k) r.c_[k] = mod(coords[k]);
  return r;
}

ZqElem ZqRing::lift(const FqElem& x) const {
  if (&x.field() != field_) throw DomainError("field mismatch in lift");
  ZqElem r(*this);
  for (unsigned k = 0; k < degree(); ++k) r.c_[k] = x.coordinate(k);
  return r;
}

ZqElem ZqRing::teichmuller(const FqElem& x) const {
  if (&x.field() != field_) throw DomainError("field mismatch in Teichmüller lift");
  return teichmuller_[x.code()];
}

FqElem ZqRing::reduce(const ZqElem& x) const {
  std::vector<unsigned> coords(degree());
  for (unsigned k = 0; k < degree(); ++k) coords[k] = static_cast<unsigned>(x.c_[k] % prime());
  return field_->from_coordinates(coords);
}

ZqElem ZqRing::reduce_to(const ZqElem& x, const ZqRing& coarser) const {
  if (coarser.field_ != field_ || coarser.precision_ > precision_)
    throw DomainError("reduce_to needs a coarser ring over the same field");
  ZqElem r(coarser);
  for (unsigned k = 0; k < degree(); ++k) r.c_[k] = x.c_[k] % coarser.pm_;
  return r;
}

void ZqRing::reduce_poly(std::array<std::int64_t, 2 * kMaxLiftDegree>& prod) const {
  const unsigned e = degree();
  for (int d = static_cast<int>(2 * e) - 2; d >= static_cast<int>(e); --d) {
    const std::int64_t f = mod(prod[d]);
    prod[d] = 0;
    if (f == 0) continue;
    for (unsigned i = 0; i < e; ++i) prod[d - e + i] = mod(prod[d - e + i] - f * lifted_modulus_[i]);
  }
}

const ZqRing& ZqElem::checked(const ZqElem& o) const {
  if (ring_ != o.ring_ || ring_ == nullptr) throw DomainError("lift ring mismatch");
  return *ring_;
}

bool ZqElem::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

bool ZqElem::is_unit() const { return !ring_->reduce(*this).is_zero(); }

ZqElem ZqElem::operator+(const ZqElem& o) const {
  const ZqRing& r = checked(o);
  ZqElem out(r);
  for (unsigned k = 0; k < r.degree(); ++k) {
    std::int64_t v = c_[k] + o.c_[k];
    if (v >= r.modulus()) v -= r.modulus();
    out.c_[k] = v;
  }
  return out;
}

ZqElem ZqElem::operator-(const ZqElem& o) const {
  const ZqRing& r = checked(o);
  ZqElem out(r);
  for (unsigned k = 0; k < r.degree(); ++k) {
    std::int64_t v = c_[k] - o.c_[k];
    if (v < 0) v += r.modulus();
    out.c_[k] = v;
  }
  return out;
}

ZqElem ZqElem::operator-() const { return ring_->zero() - *this; }

ZqElem ZqElem::operator*(const ZqElem& o) const {
  const ZqRing& r = checked(o);
  const unsigned e = r.degree();
  ZqElem out(r);
  if (e == 1) {
    out.c_[0] = c_[0] * o.c_[0] % r.modulus();
    return out;
  }
  std::array<std::int64_t, 2 * kMaxLiftDegree> prod{};
  for (unsigned i = 0; i < e; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % r.modulus();
  }
  r.reduce_poly(prod);
  for (unsigned k = 0; k < e; ++k) out.c_[k] = prod[k];
  return out;
}

ZqElem ZqElem::pow(std::uint64_t e) const {
  ZqElem result = one_like();
  ZqElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ZqElem ZqElem::inverse() const {
  const ZqRing& r = *ring_;
  const FqElem red = r.reduce(*this);
  if (red.is_zero()) throw DomainError("inverting a non-unit of the lift ring");
  // Newton iteration y <- y(2 - xy) doubles the number of correct digits.
  ZqElem y = r.lift(red.inverse());
  const ZqElem two = r.from_integer(2);
  for (unsigned digits = 1; digits < r.precision(); digits *= 2) y = y * (two - *this * y);
  return y;
}

unsigned ZqElem::valuation() const {
  const ZqRing& r = *ring_;
  unsigned best = r.precision();
  for (unsigned k = 0; k < r.degree(); ++k) {
    std::int64_t v = c_[k];
    if (v == 0) continue;
    unsigned d = 0;
    while (v % r.prime() == 0) {
      v /= r.prime();
      ++d;
    }
    best = std::min(best, d);
  }
  return best;
}

ZqElem ZqElem::divide_by_p_power(unsigned k) const {
  const ZqRing& r = *ring_;
  std::int64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= r.prime();
  ZqElem out(r);
  for (unsigned j = 0; j < r.degree(); ++j) {
    if (c_[j] % pk != 0)
      throw PrecisionError("inexact division by p^" + std::to_string(k) + " (lift precision too small)");
    out.c_[j] = c_[j] / pk;
  }
  return out;
}

ZqElem ZqElem::zero_like() const { return ring_->zero(); }
ZqElem ZqElem::one_like() const { return ring_->one(); }
ZqElem ZqElem::from_integer(std::int64_t k) const { return ring_->from_integer(k); }
ZqElem ZqElem::times(std::int64_t k) const {
  const ZqRing& r = *ring_;
  const std::int64_t s = r.mod(k);
  ZqElem out(r);
  for (unsigned j = 0; j < r.degree(); ++j) out.c_[j] = c_[j] * s % r.modulus();
  return out;
}
std::uint64_t ZqElem::characteristic() const { return static_cast<std::uint64_t>(ring_->modulus()); }
unsigned ZqElem::residue_characteristic() const { return ring_->prime(); }

ZqElem lift(const FqElem& x, unsigned precision) { return ZqRing::get(x.field(), precision).lift(x); }
FqElem reduce(const ZqElem& x) { return x.ring().reduce(x); }

std::string to_string(const ZqElem& x) {
  const ZqRing& r = x.ring();
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(r.degree()) - 1; k >= 0; --k) {
    const std::int64_t c = x.coordinate(static_cast<unsigned>(k));
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'g';
      if (k > 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace asw
