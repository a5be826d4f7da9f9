#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace asw {

inline constexpr std::size_t kMaxWittLength = 4;
inline constexpr std::size_t kMaxPolyVars = 2 * kMaxWittLength;

/// Multivariate polynomial with exact integer coefficients.
class IntPoly {
 public:
  using Monomial = std::array<std::uint16_t, kMaxPolyVars>;

  IntPoly() = default;
  static IntPoly variable(std::size_t index);
  static IntPoly constant(const mpz_class& c);

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const mpz_class& k) const;
  IntPoly pow(unsigned e) const;
  /// Exact division of every coefficient; throws DomainError otherwise.
  IntPoly divided_exactly(const mpz_class& d) const;
  /// Substitute polynomials for variables 0..subs.size()-1.
  IntPoly substitute(const std::vector<IntPoly>& subs) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

  /// Variables named by `names` (index -> name), e.g. X0 + Y0.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  std::map<Monomial, mpz_class> terms_;
};

/// Coefficients of a polynomial system reduced modulo a fixed integer,
/// ready for evaluation in a ring of that characteristic.
struct ReducedPolySystem {
  struct Term {
    std::int64_t coefficient;
    std::vector<std::pair<std::uint8_t, std::uint16_t>> factors;  // (variable, exponent)
  };
  std::size_t variables = 0;
  std::vector<std::vector<Term>> outputs;
  std::vector<unsigned> max_degree;  // per variable
};

/// Universal Witt polynomials for W_n over Z, from the ghost recursion
/// T_i = (op(w_i(X), w_i(Y)) - sum_{j<i} p^j T_j^{p^{i-j}}) / p^i.
/// Sum, difference and product use variables X_0..X_{n-1} (0..n-1) and
/// Y_0..Y_{n-1} (n..2n-1).  The Frobenius system has n outputs in the
/// variables X_0..X_n and satisfies w_i(Phi) = w_{i+1}(X).
class UniversalWittPolys {
 public:
  UniversalWittPolys(unsigned p, std::size_t n);

  unsigned prime() const { return p_; }
  std::size_t length() const { return n_; }
  const std::vector<IntPoly>& sum() const { return sum_; }
  const std::vector<IntPoly>& difference() const { return diff_; }
  const std::vector<IntPoly>& product() const { return prod_; }
  const std::vector<IntPoly>& frobenius() const { return frob_; }

  enum class Op { kSum, kDifference, kProduct, kFrobenius };
  /// Coefficients reduced mod `modulus` (the characteristic of the target
  /// ring); cached per modulus.
  const ReducedPolySystem& reduced(Op op, std::uint64_t modulus) const;

  std::vector<std::string> variable_names() const;

 private:
  unsigned p_;
  std::size_t n_;
  std::vector<IntPoly> sum_, diff_, prod_, frob_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, std::uint64_t>, std::unique_ptr<ReducedPolySystem>> cache_;
};

/// Memoized per (p, n).  Requires p prime, 1 <= n <= 4 and p^{n-1} <= 27.
const UniversalWittPolys& universal_polys(unsigned p, std::size_t n);

/// Ghost polynomial w_i = sum_{j<=i} p^j X_{offset+j}^{p^{i-j}}.
IntPoly ghost_polynomial(unsigned p, std::size_t i, std::size_t offset);

}  // namespace asw
