#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asw/fq.hpp"
#include "asw/laurent.hpp"
#include "asw/witt.hpp"

namespace asw {

/// b = t^v * u0 * w with u0 in F_q^x and w = 1 + O(t).
struct UnitDecomposition {
  int valuation;
  FqElem constant_unit;
  LaurentFq principal;
};
UnitDecomposition unit_decompose(const LaurentFq& b);

/// Element of G_{n,m}: exponent of t mod p^n and the principal part
/// 1 + sum_{1<=j<m} c_j t^j in normal form (c_j = 0 whenever p^n | j).
struct UnitClass {
  std::uint64_t t_exponent = 0;
  std::vector<FqElem> coefficients;  // c_1 .. c_{m-1}

  friend bool operator==(const UnitClass&, const UnitClass&) = default;
};

/// G_{n,m} = K^x / (K^x)^{p^n} U^m for K = F_q((t)).
///
/// F_q^x has order prime to p, so constants die; (U^1)^{p^n} is the set of
/// principal units that are series in t^{p^n}.  Dividing out the
/// coefficients at t^{k p^n} from left to right therefore gives a unique
/// representative of each class, and
///   |G_{n,m}| = p^n * q^{(m-1) - floor((m-1)/p^n)}  (m >= 1),  p^n  (m = 0).
class UnitQuot {
 public:
  /// Enumeration bound q^{m-1} <= 10^5.
  static constexpr std::uint64_t kMaxPrincipalSize = 100000;

  UnitQuot(const FqField& field, std::size_t n, unsigned m);

  const FqField& field() const { return *field_; }
  std::size_t witt_length() const { return n_; }
  unsigned level() const { return m_; }
  std::uint64_t p_power() const { return pn_; }
  std::uint64_t order() const { return order_; }

  UnitClass identity() const;
  UnitClass multiply(const UnitClass& x, const UnitClass& y) const;
  UnitClass power(const UnitClass& x, std::uint64_t k) const;
  /// Normal form of an arbitrary t^k (1 + sum c_j t^j).
  UnitClass normalize(std::uint64_t t_exponent, std::vector<FqElem> coefficients) const;

  /// Class of b; b must be known modulo t^{v(b)+m}.
  UnitClass project(const LaurentFq& b) const;
  /// Image of an element of G_{n,m'} (m' >= m) under G_{n,m'} -> G_{n,m}.
  UnitClass project_from(const UnitQuot& finer, const UnitClass& x) const;
  /// Exact Laurent polynomial t^k (1 + sum c_j t^j) representing x.
  LaurentFq representative(const UnitClass& x) const;

  std::uint64_t index_of(const UnitClass& x) const;
  UnitClass element(std::uint64_t index) const;
  std::vector<UnitClass> elements() const;
  /// x is in the image of U^k (k <= m): trivial t-part and c_j = 0 for j < k.
  bool in_unit_image(const UnitClass& x, unsigned k) const;

  /// t, then 1 + c t^j for j = 1..m-1 and c in the F_p-basis of F_q.
  std::vector<LaurentFq> generators() const;
  std::vector<std::string> generator_labels() const;

 private:
  void reduce_principal(std::vector<FqElem>& c) const;

  const FqField* field_;
  std::size_t n_;
  unsigned m_;
  std::uint64_t pn_;
  std::uint64_t order_;
  std::vector<unsigned> free_positions_;  // j in [1, m) with p^n not dividing j
};

/// |G_{n,m}| without building the group.
std::uint64_t unit_quot_order(const FqField& field, std::size_t n, unsigned m);

/// One row of the check |G_{n,m}| = |G_{n-1,ceil(m/p)}| * |G_{1,m}|.
struct OrderIdentityRow {
  unsigned m;
  std::uint64_t lhs;
  std::uint64_t lower;  // |G_{n-1, ceil(m/p)}|, 1 when n = 1
  std::uint64_t first;  // |G_{1,m}|
  bool holds;
};
/// Orders come from built groups (normal-form enumeration), for m = 0..m_max.
std::vector<OrderIdentityRow> order_identity_check(const FqField& field, std::size_t n, unsigned m_max);

}  // namespace asw
