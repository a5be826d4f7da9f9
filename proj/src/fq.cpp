#include "asw/fq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "asw/error.hpp"

namespace asw {

namespace {

constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

std::vector<unsigned> conway_modulus(unsigned p, unsigned e) {
  // Ascending coefficients c_0, ..., c_e.
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 1}, {1, 1}},    {{2, 2}, {1, 1, 1}}, {{2, 3}, {1, 1, 0, 1}},
      {{3, 1}, {1, 1}},    {{3, 2}, {2, 2, 1}}, {{3, 3}, {1, 2, 0, 1}},
      {{5, 1}, {3, 1}},    {{5, 2}, {2, 4, 1}}, {{5, 3}, {3, 3, 0, 1}},
  };
  auto it = table.find({p, e});
  if (it == table.end()) {
    throw DomainError("no Conway polynomial stored for p=" + std::to_string(p) +
                      ", e=" + std::to_string(e) + " (supply --modulus)");
  }
  return it->second;
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<unsigned, std::vector<unsigned>>, std::unique_ptr<FqField>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

// Polynomials over F_p as ascending coefficient vectors.
using PolyP = std::vector<unsigned>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_rem(PolyP a, const PolyP& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  unsigned inv_lead = 1;
  for (unsigned x = 1; x < p; ++x)
    if (x * b.back() % p == 1) inv_lead = x;
  while (a.size() >= b.size()) {
    const unsigned f = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p * p - f * b[i] % p) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(unsigned p, std::span<const unsigned> coeffs) {
  PolyP f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PolyP g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

const FqField& FqField::conway(unsigned p, unsigned e) { return with_modulus(p, conway_modulus(p, e)); }

const FqField& FqField::with_modulus(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("modulus must be monic of degree >= 1");
  if (!is_irreducible_mod_p(p, modulus)) throw DomainError("modulus is reducible over F_p");
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  auto key = std::make_pair(p, modulus);
  auto it = r.fields.find(key);
  if (it != r.fields.end()) return *it->second;
  auto field = std::unique_ptr<FqField>(new FqField(p, modulus));
  const FqField& ref = *field;
  r.fields.emplace(std::move(key), std::move(field));
  return ref;
}

FqField::FqField(unsigned p, std::vector<unsigned> modulus)
    : p_(p), e_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  pow_p_.push_back(1);
  for (unsigned k = 0; k < e_; ++k) {
    q *= p_;
    if (q > kMaxFieldOrder) throw DomainError("field order exceeds 65536");
    pow_p_.push_back(static_cast<std::uint32_t>(q));
  }
  q_ = static_cast<std::uint32_t>(q);

  // Discrete log tables from the first primitive element in code order.
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    std::uint32_t x = 1;
    std::uint32_t ord = 0;
    do {
      exp_[ord] = x;
      x = poly_mulmod(x, cand);
      ++ord;
    } while (x != 1 && ord < q_);
    if (ord == q_ - 1) break;
  }
  for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;

  for (std::uint32_t c = 1; c < q_; ++c) {
    if (fq_trace(FqElem(*this, c)) != 0) {
      trace_unit_ = c;
      break;
    }
  }
}

std::uint32_t FqField::poly_mulmod(std::uint32_t a, std::uint32_t b) const {
  std::vector<unsigned> pa(e_), pb(e_), prod(2 * e_, 0);
  for (unsigned k = 0; k < e_; ++k) {
    pa[k] = a / pow_p_[k] % p_;
    pb[k] = b / pow_p_[k] % p_;
  }
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  for (int d = static_cast<int>(2 * e_) - 1; d >= static_cast<int>(e_); --d) {
    const unsigned f = prod[d];
    if (f == 0) continue;
    for (unsigned i = 0; i <= e_; ++i) {
      unsigned& slot = prod[d - e_ + i];
      slot = (slot + p_ * p_ - f * modulus_[i] % p_) % p_;
    }
  }
  std::uint32_t r = 0;
  for (unsigned k = 0; k < e_; ++k) r += prod[k] * pow_p_[k];
  return r;
}

std::uint32_t FqField::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return (a + b) % p_;
  std::uint32_t r = 0;
  for (unsigned k = 0; k < e_; ++k) r += ((a / pow_p_[k] + b / pow_p_[k]) % p_) * pow_p_[k];
  return r;
}

std::uint32_t FqField::neg(std::uint32_t a) const {
  if (e_ == 1) return (p_ - a) % p_;
  std::uint32_t r = 0;
  for (unsigned k = 0; k < e_; ++k) r += ((p_ - a / pow_p_[k] % p_) % p_) * pow_p_[k];
  return r;
}

std::uint32_t FqField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FqField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FqField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("division by zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FqField::power(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FqElem FqField::generator() const { return e_ == 1 ? FqElem(*this, (p_ - modulus_[0]) % p_) : FqElem(*this, p_); }

FqElem FqField::element(std::uint32_t code) const {
  if (code >= q_) throw DomainError("element code out of range");
  return FqElem(*this, code);
}

FqElem FqField::from_integer(std::int64_t k) const {
  const std::int64_t r = ((k % static_cast<std::int64_t>(p_)) + p_) % p_;
  return FqElem(*this, static_cast<std::uint32_t>(r));
}

FqElem FqField::from_coordinates(std::span<const unsigned> coords) const {
  if (coords.size() > e_) throw DomainError("too many coordinates for F_q element");
  std::uint32_t r = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) r += (coords[k] % p_) * pow_p_[k];
  return FqElem(*this, r);
}

std::vector<FqElem> FqField::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(*this, c);
  return out;
}

std::vector<FqElem> FqField::prime_field_basis() const {
  std::vector<FqElem> out;
  for (unsigned k = 0; k < e_; ++k) out.emplace_back(*this, pow_p_[k]);
  return out;
}

FqElem::FqElem(const FqField& field, std::uint32_t code) : field_(&field), code_(code) {}

const FqField& FqElem::checked(const FqElem& o) const {
  if (field_ != o.field_ || field_ == nullptr) throw DomainError("field mismatch");
  return *field_;
}

unsigned FqElem::coordinate(unsigned k) const { return code_ / field_->pow_p_[k] % field_->p_; }
bool FqElem::is_one() const { return code_ == 1; }

FqElem FqElem::operator+(const FqElem& o) const { return FqElem(checked(o), field_->add(code_, o.code_)); }
FqElem FqElem::operator-(const FqElem& o) const { return FqElem(checked(o), field_->sub(code_, o.code_)); }
FqElem FqElem::operator*(const FqElem& o) const { return FqElem(checked(o), field_->mul(code_, o.code_)); }
FqElem FqElem::operator/(const FqElem& o) const {
  const FqField& f = checked(o);
  return FqElem(f, f.mul(code_, f.inv(o.code_)));
}
FqElem FqElem::operator-() const { return FqElem(*field_, field_->neg(code_)); }
FqElem FqElem::inverse() const { return FqElem(*field_, field_->inv(code_)); }
FqElem FqElem::pow(std::uint64_t e) const { return FqElem(*field_, field_->power(code_, e)); }
FqElem FqElem::frobenius() const { return pow(field_->p_); }
FqElem FqElem::frobenius_inverse() const { return pow(field_->q_ / field_->p_); }
FqElem FqElem::zero_like() const { return FqElem(*field_, 0); }
FqElem FqElem::one_like() const { return FqElem(*field_, 1); }
FqElem FqElem::from_integer(std::int64_t k) const { return field_->from_integer(k); }
FqElem FqElem::times(std::int64_t k) const { return *this * field_->from_integer(k); }
std::uint64_t FqElem::characteristic() const { return field_->p_; }
unsigned FqElem::residue_characteristic() const { return field_->p_; }

unsigned fq_trace(const FqElem& x) {
  const FqField& f = x.field();
  FqElem acc = f.zero();
  FqElem y = x;
  for (unsigned k = 0; k < f.degree(); ++k) {
    acc += y;
    y = y.frobenius();
  }
  // The trace lies in the prime field, whose codes are 0..p-1.
  return acc.code();
}

std::string to_string(const FqElem& x) {
  const FqField& f = x.field();
  if (f.degree() == 1) return std::to_string(x.code());
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(f.degree()) - 1; k >= 0; --k) {
    const unsigned c = x.coordinate(static_cast<unsigned>(k));
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
