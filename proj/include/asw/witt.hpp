#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asw/error.hpp"
#include "asw/fq.hpp"
#include "asw/laurent.hpp"
#include "asw/witt_polys.hpp"
#include "asw/zq.hpp"

namespace asw {

namespace detail {

template <CoefficientRing R>
bool exact_zero(const R& x) {
  if constexpr (requires { x.is_exact_zero(); }) {
    return x.is_exact_zero();
  } else {
    return x.is_zero();
  }
}

/// Evaluates every output of a reduced polynomial system at `vars`.
template <CoefficientRing R>
std::vector<R> evaluate(const ReducedPolySystem& sys, std::span<const R> vars) {
  const R zero = vars.front().zero_like();
  std::vector<std::vector<R>> powers(sys.variables);
  std::vector<bool> is_zero(sys.variables);
  for (std::size_t v = 0; v < sys.variables; ++v) {
    is_zero[v] = exact_zero(vars[v]);
    if (is_zero[v] || sys.max_degree[v] == 0) continue;
    powers[v].reserve(sys.max_degree[v] + 1);
    powers[v].push_back(vars[v].one_like());
    powers[v].push_back(vars[v]);
    for (unsigned k = 2; k <= sys.max_degree[v]; ++k) powers[v].push_back(powers[v].back() * vars[v]);
  }
  std::vector<R> out;
  out.reserve(sys.outputs.size());
  for (const auto& terms : sys.outputs) {
    R acc = zero;
    for (const auto& term : terms) {
      bool vanishes = false;
      for (const auto& [v, e] : term.factors) {
        if (is_zero[v]) {
          vanishes = true;
          break;
        }
      }
      if (vanishes) continue;
      R prod = powers[term.factors.front().first][term.factors.front().second];
      for (std::size_t k = 1; k < term.factors.size(); ++k)
        prod = prod * powers[term.factors[k].first][term.factors[k].second];
      acc = acc + (term.coefficient == 1 ? prod : prod.times(term.coefficient));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace detail

/// Truncated Witt vector (a_0, ..., a_{n-1}) of length n over R, in the
/// standard component order.  Ring operations evaluate the universal
/// polynomials with coefficients reduced to the characteristic of R.
template <CoefficientRing R>
class WittVec {
 public:
  WittVec() = default;
  explicit WittVec(std::vector<R> components) : c_(std::move(components)) {
    if (c_.empty()) throw DomainError("Witt vector needs at least one component");
    p_ = c_.front().residue_characteristic();
  }

  static WittVec zero(std::size_t n, const R& proto) { return WittVec(std::vector<R>(n, proto.zero_like())); }
  static WittVec one(std::size_t n, const R& proto) {
    std::vector<R> c(n, proto.zero_like());
    c[0] = proto.one_like();
    return WittVec(std::move(c));
  }

  unsigned prime() const { return p_; }
  std::size_t length() const { return c_.size(); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  std::span<const R> components() const { return c_; }
  const R& proto() const { return c_.front(); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend WittVec operator+(const WittVec& a, const WittVec& b) { return binary(a, b, UniversalWittPolys::Op::kSum); }
  friend WittVec operator-(const WittVec& a, const WittVec& b) {
    return binary(a, b, UniversalWittPolys::Op::kDifference);
  }
  friend WittVec operator*(const WittVec& a, const WittVec& b) {
    return binary(a, b, UniversalWittPolys::Op::kProduct);
  }
  WittVec operator-() const { return zero(length(), proto()) - *this; }
  WittVec& operator+=(const WittVec& b) { return *this = *this + b; }
  WittVec& operator-=(const WittVec& b) { return *this = *this - b; }

  friend bool operator==(const WittVec& a, const WittVec& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Restriction R: W_n -> W_k, keeping the first k components.
  WittVec truncated(std::size_t k) const {
    if (k < 1 || k > c_.size()) throw DomainError("restriction length out of range");
    return WittVec(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(k)));
  }

 private:
  static WittVec binary(const WittVec& a, const WittVec& b, UniversalWittPolys::Op op) {
    if (a.length() != b.length()) throw DomainError("Witt vector length mismatch");
    const std::size_t n = a.length();
    const auto& polys = universal_polys(a.p_, n);
    const auto& sys = polys.reduced(op, a.proto().characteristic());
    std::vector<R> vars;
    vars.reserve(2 * n);
    vars.insert(vars.end(), a.c_.begin(), a.c_.end());
    vars.insert(vars.end(), b.c_.begin(), b.c_.end());
    return WittVec(detail::evaluate<R>(sys, vars));
  }

  unsigned p_ = 0;
  std::vector<R> c_;
};

/// [x]_n = (x, 0, ..., 0).
template <CoefficientRing R>
WittVec<R> teichmuller(const R& x, std::size_t n) {
  std::vector<R> c(n, x.zero_like());
  c[0] = x;
  return WittVec<R>(std::move(c));
}

/// V(a_0, ..., a_{n-1}) = (0, a_0, ..., a_{n-1}), of length n+1.
template <CoefficientRing R>
WittVec<R> verschiebung(const WittVec<R>& a) {
  std::vector<R> c;
  c.reserve(a.length() + 1);
  c.push_back(a.proto().zero_like());
  c.insert(c.end(), a.components().begin(), a.components().end());
  return WittVec<R>(std::move(c));
}

/// Length-preserving V: (0, a_0, ..., a_{n-2}).
template <CoefficientRing R>
WittVec<R> verschiebung_truncated(const WittVec<R>& a) {
  return verschiebung(a).truncated(a.length());
}

/// V^k of a length-n' vector, placed into length n'+k.
template <CoefficientRing R>
WittVec<R> verschiebung_power(const WittVec<R>& a, std::size_t k) {
  WittVec<R> out = a;
  for (std::size_t i = 0; i < k; ++i) out = verschiebung(out);
  return out;
}

/// Frobenius in characteristic p: componentwise p-th power.
template <CoefficientRing R>
  requires HasFrobenius<R>
WittVec<R> frobenius(const WittVec<R>& a) {
  if (a.proto().characteristic() != a.prime()) throw DomainError("componentwise Frobenius needs characteristic p");
  std::vector<R> c;
  c.reserve(a.length());
  for (const auto& x : a.components()) c.push_back(x.frobenius());
  return WittVec<R>(std::move(c));
}

/// Frobenius through the universal polynomials Phi_i (w_i(Phi) =
/// w_{i+1}(X)): W_{n+1}(R) -> W_n(R), valid in any characteristic.
template <CoefficientRing R>
WittVec<R> universal_frobenius(const WittVec<R>& a) {
  if (a.length() < 2) throw DomainError("universal Frobenius needs length >= 2 input");
  const std::size_t n = a.length() - 1;
  const auto& sys = universal_polys(a.prime(), n).reduced(UniversalWittPolys::Op::kFrobenius,
                                                          a.proto().characteristic());
  return WittVec<R>(detail::evaluate<R>(sys, a.components()));
}

/// Ghost components w_i = sum_{j<=i} p^j a_j^{p^{i-j}}.
template <CoefficientRing R>
std::vector<R> ghost(const WittVec<R>& a) {
  const unsigned p = a.prime();
  std::vector<R> out;
  // powers[j] holds a_j^{p^{i-j}} for the current i.
  std::vector<R> powers;
  for (std::size_t i = 0; i < a.length(); ++i) {
    for (auto& x : powers) x = x.pow(p);
    powers.push_back(a[i]);
    R acc = a.proto().zero_like();
    std::int64_t pj = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      acc = acc + (pj == 1 ? powers[j] : powers[j].times(pj));
      pj *= p;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// k * a for an integer k >= 0 (repeated Witt addition).
template <CoefficientRing R>
WittVec<R> scalar_multiple(const WittVec<R>& a, std::uint64_t k) {
  WittVec<R> result = WittVec<R>::zero(a.length(), a.proto());
  WittVec<R> base = a;
  while (k > 0) {
    if (k & 1) result = result + base;
    k >>= 1;
    if (k) base = base + base;
  }
  return result;
}

using LaurentFq = Laurent<FqElem>;
using LaurentZq = Laurent<ZqElem>;
using WittFq = WittVec<FqElem>;
using WittZq = WittVec<ZqElem>;
using WittK = WittVec<LaurentFq>;

/// Inverse of the ghost map over Z_q / p^M: solves
/// a_i = (w_i - sum_{j<i} p^j a_j^{p^{i-j}}) / p^i, checking every division.
/// The result lives in Z_q / p^{M-(n-1)}, where all its digits are known.
WittZq ghost_inverse(std::span<const ZqElem> w);

/// Witt sum of the e Frobenius conjugates of a, in W_n(F_p).
WittFq wittvec_trace_vector(const WittFq& a);
/// The same trace read in Z/p^n through W_n(F_p) = Z/p^n, [1] -> 1.
std::uint64_t wittvec_trace(const WittFq& a);

/// W_n(F_p) -> Z/p^n: (a_0, ..., a_{n-1}) -> sum p^i omega(a_i) mod p^n.
std::uint64_t witt_fp_to_integer(const WittFq& a);
WittFq integer_to_witt_fp(std::uint64_t k, const FqField& field, std::size_t n);

/// [1 + a]_n = x + y with x in W_n(F_p) (constant part, equal to [1]_n)
/// and every component of y of valuation >= 1.
struct TeichDecomposition {
  WittK constant_part;
  WittK t_part;
};
TeichDecomposition teich_one_plus_decomp(const LaurentFq& a, std::size_t n);

}  // namespace asw
