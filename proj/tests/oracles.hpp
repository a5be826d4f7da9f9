#pragma once
// Independent reference computations.  Everything here is deliberately
// naive: plain vectors, brute-force enumeration, closed formulas.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "asw/fq.hpp"
#include "asw/laurent.hpp"
#include "asw/witt.hpp"

namespace oracle {

using asw::FqElem;
using asw::FqField;

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

// Teichmüller representative of a (mod p) in Z/p^n: a^{p^{n-1}}.
inline std::uint64_t teich(std::uint64_t a, unsigned p, unsigned n) { return powmod(a, ipow(p, n - 1), ipow(p, n)); }

// W_n(F_p) -> Z/p^n, (a_i) -> sum p^i [a_i].
inline std::uint64_t witt_fp_value(const asw::WittFq& a) {
  const unsigned p = a.prime();
  const unsigned n = static_cast<unsigned>(a.length());
  const std::uint64_t pn = ipow(p, n);
  std::uint64_t v = 0;
  for (unsigned i = 0; i < n; ++i) v = (v + ipow(p, i) * teich(a[i].coordinate(0), p, n)) % pn;
  return v;
}

inline std::uint64_t binom(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Length-2 Witt arithmetic in characteristic p from the textbook formulas
//   S_1 = X_1 + Y_1 - sum_{0<k<p} (C(p,k)/p) X_0^k Y_0^{p-k}
//   P_1 = X_0^p Y_1 + X_1 Y_0^p
inline asw::WittFq w2_sum(const asw::WittFq& x, const asw::WittFq& y) {
  const unsigned p = x.prime();
  FqElem carry = x[0].zero_like();
  for (unsigned k = 1; k < p; ++k) carry += (x[0].pow(k) * y[0].pow(p - k)).times(static_cast<std::int64_t>(binom(p, k) / p));
  return asw::WittFq({x[0] + y[0], x[1] + y[1] - carry});
}
inline asw::WittFq w2_product(const asw::WittFq& x, const asw::WittFq& y) {
  const unsigned p = x.prime();
  return asw::WittFq({x[0] * y[0], x[0].pow(p) * y[1] + x[1] * y[0].pow(p)});
}

// ---- naive power series over F_q, coefficients of t^0..t^{len-1} ----

using Coeffs = std::vector<FqElem>;

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs r(len, a.front().zero_like());
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Coeffs inverse(const Coeffs& a, std::size_t len) {
  Coeffs r(len, a.front().zero_like());
  const FqElem inv0 = a.front().inverse();
  for (std::size_t k = 0; k < len; ++k) {
    FqElem s = k == 0 ? a.front().one_like() : a.front().zero_like();
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s -= a[j] * r[k - j];
    r[k] = s * inv0;
  }
  return r;
}

inline unsigned trace(const FqElem& x) {
  const FqField& f = x.field();
  FqElem s = f.zero(), y = x;
  for (unsigned i = 0; i < f.degree(); ++i, y = y.pow(f.characteristic())) s += y;
  return s.coordinate(0);
}

// tr Res(a * db/b) for exact Laurent polynomials a and unit b.
inline unsigned schmid(const asw::LaurentFq& a, const asw::LaurentFq& b) {
  const FqElem zero = b.proto();
  const int v = b.lowest_exponent();
  Coeffs u(b.stored().begin(), b.stored().end());  // b = t^v u
  const int need = std::max(0, a.pole_order());    // coefficients of u'/u up to t^{need-1}
  FqElem res = zero;
  if (!a.is_zero()) res += a.coeff(0).times(v);
  if (need > 0) {
    Coeffs du;
    for (std::size_t k = 1; k < u.size(); ++k) du.push_back(u[k].times(static_cast<std::int64_t>(k)));
    if (du.empty()) du.push_back(zero);
    const Coeffs q = mul(du, inverse(u, need), need);
    for (int k = 0; k < need; ++k) res += a.coeff(-1 - k) * q[k];
  }
  return trace(res);
}

// ---- U^1 / U^m by brute force ----

// Principal units 1 + c_1 t + ... + c_{m-1} t^{m-1} mod t^m, stored as
// codes c_1..c_{m-1}.
class PrincipalUnits {
 public:
  PrincipalUnits(const FqField& f, unsigned m) : f_(f), m_(m) {}

  using Elem = std::vector<std::uint32_t>;

  Coeffs series(const Elem& x) const {
    Coeffs c{f_.one()};
    for (auto code : x) c.push_back(f_.element(code));
    return c;
  }
  Elem from_series(const Coeffs& c) const {
    Elem x;
    for (unsigned j = 1; j < m_; ++j) x.push_back(c[j].code());
    return x;
  }
  Elem multiply(const Elem& a, const Elem& b) const { return from_series(mul(series(a), series(b), m_)); }
  Elem power(Elem a, std::uint64_t e) const {
    Elem r(m_ - 1, 0);
    for (; e; e >>= 1, a = multiply(a, a))
      if (e & 1) r = multiply(r, a);
    return r;
  }
  std::vector<Elem> all() const {
    std::vector<Elem> out{Elem{}};
    for (unsigned j = 1; j < m_; ++j) {
      std::vector<Elem> next;
      for (const auto& x : out)
        for (std::uint32_t c = 0; c < f_.order(); ++c) {
          Elem y = x;
          y.push_back(c);
          next.push_back(y);
        }
      out = std::move(next);
    }
    return out;
  }
  // (U^1)^{e} U^m / U^m
  std::set<Elem> powers(std::uint64_t e) const {
    std::set<Elem> s;
    for (const auto& x : all()) s.insert(power(x, e));
    return s;
  }

 private:
  const FqField& f_;
  unsigned m_;
};

// |K^x / (K^x)^{p^n} U^m| = p^n * [U^1 : (U^1)^{p^n} U^m] for m >= 1.
inline std::uint64_t unit_group_order(const FqField& f, unsigned n, unsigned m) {
  const std::uint64_t pn = ipow(f.characteristic(), n);
  if (m == 0) return pn;
  const PrincipalUnits u(f, m);
  return pn * ipow(f.order(), m - 1) / u.powers(pn).size();
}

// b1 and b2 define the same class of K^x / (K^x)^{p^n} U^m (m >= 1).
inline bool same_class(const asw::LaurentFq& b1, const asw::LaurentFq& b2, unsigned n, unsigned m) {
  const FqField& f = b1.proto().field();
  const std::uint64_t pn = ipow(f.characteristic(), n);
  const long dv = static_cast<long>(b1.lowest_exponent()) - b2.lowest_exponent();
  if (((dv % static_cast<long>(pn)) + static_cast<long>(pn)) % static_cast<long>(pn) != 0) return false;
  Coeffs u1(b1.stored().begin(), b1.stored().end()), u2(b2.stored().begin(), b2.stored().end());
  Coeffs r = mul(u1, inverse(u2, m), m);
  const FqElem c = r.front().inverse();  // constants are p^n-th powers
  for (auto& x : r) x *= c;
  const PrincipalUnits u(f, m);
  return u.powers(pn).count(u.from_series(r)) == 1;
}

}  // namespace oracle
