#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asw/error.hpp"

namespace asw {

/// Precision marker for series that are exact Laurent polynomials.
inline constexpr int kExact = std::numeric_limits<int>::max();
/// Relative precision used when an exact operand produces an infinite
/// series (division by a non-monomial) and the caller gave no target.
inline constexpr int kDefaultRelativePrecision = 64;

/// Coefficient rings usable in series and Witt vectors.
template <class R>
concept CoefficientRing = requires(const R a, const R b, std::int64_t k) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::same_as<R>;
  { a.one_like() } -> std::same_as<R>;
  { a.from_integer(k) } -> std::same_as<R>;
  { a.times(k) } -> std::same_as<R>;
  { a.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a.residue_characteristic() } -> std::convertible_to<unsigned>;
};

template <class R>
concept HasFrobenius = requires(const R a) {
  { a.frobenius() } -> std::same_as<R>;
};

namespace detail {

constexpr int add_prec(int a, int b) { return (a == kExact || b == kExact) ? kExact : a + b; }

}  // namespace detail

/// Truncated Laurent series sum c_i t^{v0+i} + O(t^N) over a coefficient
/// ring.  N == kExact marks an exact Laurent polynomial.  Stored
/// coefficients never reach the precision and the first and last stored
/// coefficients are nonzero, so an empty vector means "zero mod t^N".
template <CoefficientRing R>
class Laurent {
 public:
  using coefficient_type = R;

  Laurent() = default;
  /// Zero series over the ring of `proto`.
  explicit Laurent(const R& proto, int precision = kExact) : proto_(proto.zero_like()), prec_(precision) {}

  static Laurent monomial(const R& c, int exponent, int precision = kExact) {
    return from_terms(c, exponent, {c}, precision);
  }
  static Laurent constant(const R& c, int precision = kExact) { return monomial(c, 0, precision); }
  static Laurent from_terms(const R& proto, int lowest, std::vector<R> coeffs, int precision = kExact) {
    Laurent f(proto, precision);
    f.v0_ = lowest;
    f.c_ = std::move(coeffs);
    f.normalize();
    return f;
  }

  int precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  bool is_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && prec_ == kExact; }
  const R& proto() const { return proto_; }

  std::optional<int> valuation() const {
    if (c_.empty()) return std::nullopt;
    return v0_;
  }
  /// Valuation, or the precision for the zero-mod-precision series.
  int valuation_bound() const { return c_.empty() ? prec_ : v0_; }
  /// max(0, -valuation); 0 for the zero series.
  int pole_order() const { return c_.empty() ? 0 : std::max(0, -v0_); }
  /// Exponent range of stored coefficients [lowest, highest]; empty for zero.
  int lowest_exponent() const { return v0_; }
  int highest_exponent() const { return v0_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& stored() const { return c_; }

  R coeff(int k) const {
    if (k >= prec_) throw PrecisionError("coefficient of t^" + std::to_string(k) + " beyond precision O(t^" +
                                         std::to_string(prec_) + ")");
    if (c_.empty() || k < v0_ || k > highest_exponent()) return proto_;
    return c_[static_cast<std::size_t>(k - v0_)];
  }
  R leading_coefficient() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero series");
    return c_.front();
  }
  bool is_monomial() const { return c_.size() == 1; }

  /// Same series with precision lowered to min(N, precision()).
  Laurent truncated(int n) const {
    Laurent f = *this;
    f.prec_ = std::min(prec_, n);
    f.normalize();
    return f;
  }
  /// Multiplication by t^k.
  Laurent shifted(int k) const {
    Laurent f = *this;
    f.v0_ += k;
    f.prec_ = detail::add_prec(prec_, k);
    return f;
  }

  Laurent operator-() const {
    Laurent f = *this;
    for (auto& c : f.c_) c = -c;
    return f;
  }

  friend Laurent operator+(const Laurent& f, const Laurent& g) { return f.combine(g, false); }
  friend Laurent operator-(const Laurent& f, const Laurent& g) { return f.combine(g, true); }

  friend Laurent operator*(const Laurent& f, const Laurent& g) {
    const int prec = std::min(detail::add_prec(f.prec_, g.valuation_bound()),
                              detail::add_prec(g.prec_, f.valuation_bound()));
    Laurent h(f.proto_, prec);
    if (f.c_.empty() || g.c_.empty()) return h;
    h.v0_ = f.v0_ + g.v0_;
    const std::size_t full = f.c_.size() + g.c_.size() - 1;
    std::size_t len = full;
    if (prec != kExact) len = static_cast<std::size_t>(std::clamp<long>(static_cast<long>(prec) - h.v0_, 0L,
                                                                         static_cast<long>(full)));
    h.c_.assign(len, f.proto_);
    for (std::size_t i = 0; i < f.c_.size() && i < len; ++i) {
      if (f.c_[i].is_zero()) continue;
      const std::size_t jmax = std::min(g.c_.size(), len - i);
      for (std::size_t j = 0; j < jmax; ++j) h.c_[i + j] += f.c_[i] * g.c_[j];
    }
    h.normalize();
    return h;
  }

  Laurent& operator+=(const Laurent& g) { return *this = *this + g; }
  Laurent& operator-=(const Laurent& g) { return *this = *this - g; }
  Laurent& operator*=(const Laurent& g) { return *this = *this * g; }

  Laurent pow(std::uint64_t e) const {
    Laurent result = one_like();
    Laurent base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Formal d/dt.
  Laurent derivative() const {
    Laurent f(proto_, detail::add_prec(prec_, -1));
    if (c_.empty()) return f;
    f.v0_ = v0_ - 1;
    f.c_.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) f.c_.push_back(c_[i].times(v0_ + static_cast<int>(i)));
    f.normalize();
    return f;
  }

  /// f^p for coefficient rings of characteristic p: sum c_i^p t^{p(v0+i)},
  /// precision p*N.
  Laurent frobenius() const
    requires HasFrobenius<R>
  {
    const int p = static_cast<int>(proto_.residue_characteristic());
    Laurent f(proto_, prec_ == kExact ? kExact : p * prec_);
    if (c_.empty()) return f;
    f.v0_ = p * v0_;
    f.c_.assign((c_.size() - 1) * p + 1, proto_);
    for (std::size_t i = 0; i < c_.size(); ++i) f.c_[i * p] = c_[i].frobenius();
    f.normalize();
    return f;
  }

  template <class F>
  auto map_coefficients(F&& fn, const decltype(fn(std::declval<R>()))& proto) const
      -> Laurent<decltype(fn(std::declval<R>()))> {
    using U = decltype(fn(std::declval<R>()));
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(fn(c));
    return Laurent<U>::from_terms(proto, v0_, std::move(out), prec_);
  }

  // Coefficient-ring interface, so Witt vectors can have series components.
  Laurent zero_like() const { return Laurent(proto_); }
  Laurent one_like() const { return constant(proto_.one_like()); }
  Laurent from_integer(std::int64_t k) const { return constant(proto_.from_integer(k)); }
  Laurent times(std::int64_t k) const {
    Laurent f = *this;
    for (auto& c : f.c_) c = c.times(k);
    f.normalize();
    return f;
  }
  std::uint64_t characteristic() const { return proto_.characteristic(); }
  unsigned residue_characteristic() const { return proto_.residue_characteristic(); }

  /// Equality on the common known window: coefficients agree below
  /// min(precision(), g.precision()).
  friend bool operator==(const Laurent& f, const Laurent& g) {
    const int n = std::min(f.prec_, g.prec_);
    int lo = std::min(f.c_.empty() ? n : f.v0_, g.c_.empty() ? n : g.v0_);
    int hi = std::max(f.c_.empty() ? lo - 1 : f.highest_exponent(), g.c_.empty() ? lo - 1 : g.highest_exponent());
    if (n != kExact) hi = std::min(hi, n - 1);
    for (int k = lo; k <= hi; ++k)
      if (!(f.coeff(k) == g.coeff(k))) return false;
    return true;
  }
  /// Structural equality including precision.
  bool identical(const Laurent& g) const { return prec_ == g.prec_ && v0_ == g.v0_ && c_ == g.c_; }

 private:
  Laurent combine(const Laurent& g, bool subtract) const {
    const int prec = std::min(prec_, g.prec_);
    Laurent h(proto_, prec);
    if (c_.empty() && g.c_.empty()) return h;
    const int lo = c_.empty() ? g.v0_ : (g.c_.empty() ? v0_ : std::min(v0_, g.v0_));
    const int hi = std::max(c_.empty() ? lo : highest_exponent(), g.c_.empty() ? lo : g.highest_exponent());
    h.v0_ = lo;
    h.c_.assign(static_cast<std::size_t>(hi - lo + 1), proto_);
    for (std::size_t i = 0; i < c_.size(); ++i) h.c_[v0_ - lo + i] = c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) {
      R& slot = h.c_[g.v0_ - lo + i];
      slot = subtract ? slot - g.c_[i] : slot + g.c_[i];
    }
    h.normalize();
    return h;
  }

  void normalize() {
    if (prec_ != kExact) {
      const long keep = static_cast<long>(prec_) - v0_;
      if (keep <= 0) {
        c_.clear();
      } else if (static_cast<long>(c_.size()) > keep) {
        c_.resize(static_cast<std::size_t>(keep), proto_);
      }
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      v0_ = 0;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      v0_ += static_cast<int>(lead);
    }
  }

  R proto_{};
  int v0_ = 0;
  std::vector<R> c_;
  int prec_ = kExact;
};

/// Inverse of a series of valuation 0 with unit constant term, to
/// absolute precision n (coefficients of t^0..t^{n-1}).
template <CoefficientRing R>
Laurent<R> unit_series_inverse(const Laurent<R>& u, int n) {
  const R& proto = u.proto();
  if (n > u.precision()) throw PrecisionError("unit inverse requested beyond the known window");
  if (n <= 0) return Laurent<R>(proto, n);
  const R u0_inv = u.coeff(0).inverse();
  std::vector<R> r(static_cast<std::size_t>(std::max(n, 0)), proto);
  std::vector<R> uc(r.size(), proto);
  for (int k = 0; k < n; ++k) uc[k] = u.coeff(k);
  for (int k = 0; k < n; ++k) {
    R s = k == 0 ? proto.one_like() : proto;
    for (int j = 1; j <= k; ++j)
      if (!uc[j].is_zero()) s -= uc[j] * r[k - j];
    r[k] = s * u0_inv;
  }
  return Laurent<R>::from_terms(proto, 0, std::move(r), n);
}

/// Marker for divide()/dlog(): derive the precision from the operands.
inline constexpr int kNaturalPrecision = std::numeric_limits<int>::min();

/// f / g.  The result's relative precision is the smaller relative
/// precision of the operands.  When both operands are exact and g is not a
/// monomial the quotient is an infinite series: it is computed to absolute
/// precision `target`, or kDefaultRelativePrecision beyond its valuation.
template <CoefficientRing R>
Laurent<R> divide(const Laurent<R>& f, const Laurent<R>& g, int target = kNaturalPrecision) {
  if (g.is_zero()) throw DomainError("division by a series that is zero mod its precision");
  const R lead = g.leading_coefficient();
  if (!lead.is_unit()) throw DomainError("division by a series with non-unit leading coefficient");
  const int vg = *g.valuation();
  if (f.is_zero()) return Laurent<R>(f.proto(), detail::add_prec(f.precision(), -vg));
  if (g.is_monomial() && g.is_exact()) {
    const R inv = lead.inverse();
    return f.map_coefficients([&](const R& c) { return c * inv; }, f.proto()).shifted(-vg);
  }
  const int vf = *f.valuation();
  const int rel_f = f.is_exact() ? kExact : f.precision() - vf;
  const int rel_g = g.is_exact() ? kExact : g.precision() - vg;
  int rel = std::min(rel_f, rel_g);
  if (rel == kExact) rel = target == kNaturalPrecision ? kDefaultRelativePrecision : target - (vf - vg);
  rel = std::max(rel, 0);
  const Laurent<R> unit = g.shifted(-vg);
  const Laurent<R> inv = unit_series_inverse(unit.truncated(rel), rel);
  return (f.shifted(-vg) * inv).truncated(vf - vg + rel);
}

/// Logarithmic derivative (db/dt) / b.
template <CoefficientRing R>
Laurent<R> dlog(const Laurent<R>& b, int target = kNaturalPrecision) {
  if (b.is_zero()) throw DomainError("dlog of a series that is zero mod its precision");
  const int v = *b.valuation();
  const Laurent<R> u = b.shifted(-v);
  Laurent<R> q = divide(u.derivative(), u, target);
  if (v != 0) q += Laurent<R>::monomial(b.proto().from_integer(v), -1);
  return q;
}

/// Coefficient of t^{-1}.
template <CoefficientRing R>
R residue(const Laurent<R>& f) {
  if (f.precision() <= -1) throw PrecisionError("t^-1 coefficient lies outside the precision window");
  return f.coeff(-1);
}

/// Coefficient of t^{-1} in f*g without forming the product.
template <CoefficientRing R>
R residue_of_product(const Laurent<R>& f, const Laurent<R>& g) {
  const int known = std::min(detail::add_prec(f.precision(), g.valuation_bound()),
                             detail::add_prec(g.precision(), f.valuation_bound()));
  if (known <= -1) throw PrecisionError("t^-1 coefficient of a product lies outside the precision window");
  R acc = f.proto();
  if (f.is_zero() || g.is_zero()) return acc;
  const auto& fc = f.stored();
  const auto& gc = g.stored();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    const int k = -1 - (f.lowest_exponent() + static_cast<int>(i)) - g.lowest_exponent();
    if (k < 0) break;
    if (k < static_cast<int>(gc.size())) acc += fc[i] * gc[static_cast<std::size_t>(k)];
  }
  return acc;
}

}  // namespace asw
