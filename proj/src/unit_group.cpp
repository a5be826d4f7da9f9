#include "asw/unit_group.hpp"

#include "asw/error.hpp"
#include "asw/text.hpp"

namespace asw {

UnitDecomposition unit_decompose(const LaurentFq& b) {
  if (b.is_zero()) throw DomainError("unit_decompose of a series that is zero mod its precision");
  const int v = *b.valuation();
  const FqElem u0 = b.leading_coefficient();
  const FqElem inv = u0.inverse();
  LaurentFq w = b.shifted(-v).map_coefficients([&](const FqElem& c) { return c * inv; }, b.proto());
  return {v, u0, std::move(w)};
}

namespace {

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t limit, const char* what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > limit) throw DomainError(what);
  }
  return r;
}

// Truncated product of 1 + sum a_j t^j and 1 + sum b_j t^j; index j-1 holds t^j.
std::vector<FqElem> mul_principal(const std::vector<FqElem>& a, const std::vector<FqElem>& b) {
  std::vector<FqElem> r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j + 2 <= a.size(); ++j) r[i + j + 1] += a[i] * b[j];
  }
  return r;
}

}  // namespace

UnitQuot::UnitQuot(const FqField& field, std::size_t n, unsigned m) : field_(&field), n_(n), m_(m) {
  if (n < 1) throw DomainError("G_{n,m} needs n >= 1");
  pn_ = checked_pow(field.characteristic(), n, 1u << 30, "p^n too large");
  if (m >= 1) checked_pow(field.order(), m - 1, kMaxPrincipalSize, "enumeration bound q^(m-1) <= 10^5 exceeded");
  for (unsigned j = 1; j < m; ++j)
    if (j % pn_ != 0) free_positions_.push_back(j);
  order_ = pn_ * checked_pow(field.order(), free_positions_.size(), kMaxPrincipalSize, "group too large");
}

std::uint64_t unit_quot_order(const FqField& field, std::size_t n, unsigned m) {
  return UnitQuot(field, n, m).order();
}

void UnitQuot::reduce_principal(std::vector<FqElem>& c) const {
  // 1 + x t^j with p^n | j is a p^n-th power; divide it out.
  for (unsigned j = 1; j < m_; ++j) {
    if (j % pn_ != 0 || c[j - 1].is_zero()) continue;
    std::vector<FqElem> inv(c.size(), field_->zero());
    const FqElem minus = -c[j - 1];
    FqElem pw = minus;
    for (unsigned k = j; k < m_; k += j) {
      inv[k - 1] = pw;
      pw = pw * minus;
    }
    c = mul_principal(c, inv);
  }
}

UnitClass UnitQuot::identity() const {
  return {0, std::vector<FqElem>(m_ > 0 ? m_ - 1 : 0, field_->zero())};
}

UnitClass UnitQuot::normalize(std::uint64_t t_exponent, std::vector<FqElem> coefficients) const {
  const std::size_t len = m_ > 0 ? m_ - 1 : 0;
  coefficients.resize(len, field_->zero());
  reduce_principal(coefficients);
  return {t_exponent % pn_, std::move(coefficients)};
}

UnitClass UnitQuot::multiply(const UnitClass& x, const UnitClass& y) const {
  return normalize(x.t_exponent + y.t_exponent, mul_principal(x.coefficients, y.coefficients));
}

UnitClass UnitQuot::power(const UnitClass& x, std::uint64_t k) const {
  UnitClass r = identity();
  UnitClass b = x;
  while (k) {
    if (k & 1) r = multiply(r, b);
    k >>= 1;
    if (k) b = multiply(b, b);
  }
  return r;
}

UnitClass UnitQuot::project(const LaurentFq& b) const {
  const UnitDecomposition d = unit_decompose(b);
  const std::int64_t v = d.valuation;
  const std::uint64_t t_exp = static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(pn_)) + pn_) % pn_);
  if (m_ == 0) return {t_exp, {}};
  if (d.principal.precision() < static_cast<int>(m_))
    throw PrecisionError("unit known only mod t^" + std::to_string(d.principal.precision()) +
                         " after removing t^v; projection to G_{n," + std::to_string(m_) + "} needs t^" +
                         std::to_string(m_));
  std::vector<FqElem> c;
  for (unsigned j = 1; j < m_; ++j) c.push_back(d.principal.coeff(static_cast<int>(j)));
  return normalize(t_exp, std::move(c));
}

UnitClass UnitQuot::project_from(const UnitQuot& finer, const UnitClass& x) const {
  if (&finer.field() != field_ || finer.n_ != n_ || finer.m_ < m_)
    throw DomainError("tower projection needs the same field and n and a finer level");
  std::vector<FqElem> c(x.coefficients.begin(), x.coefficients.begin() + (m_ > 0 ? m_ - 1 : 0));
  return normalize(x.t_exponent, std::move(c));
}

LaurentFq UnitQuot::representative(const UnitClass& x) const {
  std::vector<FqElem> c;
  c.push_back(field_->one());
  c.insert(c.end(), x.coefficients.begin(), x.coefficients.end());
  return LaurentFq::from_terms(field_->zero(), static_cast<int>(x.t_exponent), std::move(c));
}

std::uint64_t UnitQuot::index_of(const UnitClass& x) const {
  std::uint64_t idx = 0;
  for (auto it = free_positions_.rbegin(); it != free_positions_.rend(); ++it)
    idx = idx * field_->order() + x.coefficients[*it - 1].code();
  return x.t_exponent + pn_ * idx;
}

UnitClass UnitQuot::element(std::uint64_t index) const {
  if (index >= order_) throw DomainError("group element index out of range");
  UnitClass x = identity();
  x.t_exponent = index % pn_;
  index /= pn_;
  for (unsigned j : free_positions_) {
    x.coefficients[j - 1] = field_->element(static_cast<std::uint32_t>(index % field_->order()));
    index /= field_->order();
  }
  return x;
}

std::vector<UnitClass> UnitQuot::elements() const {
  std::vector<UnitClass> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

bool UnitQuot::in_unit_image(const UnitClass& x, unsigned k) const {
  if (x.t_exponent != 0) return false;
  for (unsigned j = 1; j < k && j < m_; ++j)
    if (!x.coefficients[j - 1].is_zero()) return false;
  return true;
}

std::vector<LaurentFq> UnitQuot::generators() const {
  std::vector<LaurentFq> out{LaurentFq::monomial(field_->one(), 1)};
  const LaurentFq one = LaurentFq::constant(field_->one());
  for (unsigned j = 1; j < m_; ++j)
    for (const auto& c : field_->prime_field_basis()) out.push_back(one + LaurentFq::monomial(c, static_cast<int>(j)));
  return out;
}

std::vector<std::string> UnitQuot::generator_labels() const {
  std::vector<std::string> out;
  for (const auto& g : generators()) out.push_back(to_string(g));
  return out;
}

std::vector<OrderIdentityRow> order_identity_check(const FqField& field, std::size_t n, unsigned m_max) {
  const unsigned p = field.characteristic();
  std::vector<OrderIdentityRow> rows;
  for (unsigned m = 0; m <= m_max; ++m) {
    OrderIdentityRow r{};
    r.m = m;
    r.lhs = UnitQuot(field, n, m).order();
    r.lower = n == 1 ? 1 : UnitQuot(field, n - 1, (m + p - 1) / p).order();
    r.first = UnitQuot(field, 1, m).order();
    r.holds = r.lhs == r.lower * r.first;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace asw
