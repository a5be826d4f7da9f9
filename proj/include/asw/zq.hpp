#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "asw/fq.hpp"

namespace asw {

class ZqRing;

inline constexpr unsigned kMaxLiftDegree = 8;

/// Element of Z_q / p^M, where Z_q = Z_p[x]/(f~) is the unramified lift of
/// F_q.  Stored as coordinates in the basis 1, x, ..., x^{e-1}, each in
/// [0, p^M).
class ZqElem {
 public:
  ZqElem() = default;

  const ZqRing& ring() const { return *ring_; }
  std::int64_t coordinate(unsigned k) const { return c_[k]; }

  bool is_zero() const;
  bool is_unit() const;  // invertible iff the reduction mod p is nonzero

  ZqElem operator+(const ZqElem& o) const;
  ZqElem operator-(const ZqElem& o) const;
  ZqElem operator*(const ZqElem& o) const;
  ZqElem operator-() const;
  ZqElem& operator+=(const ZqElem& o) { return *this = *this + o; }
  ZqElem& operator-=(const ZqElem& o) { return *this = *this - o; }
  ZqElem& operator*=(const ZqElem& o) { return *this = *this * o; }

  ZqElem inverse() const;
  ZqElem pow(std::uint64_t e) const;
  /// p-adic valuation (min over coordinates); precision M for zero.
  unsigned valuation() const;
  /// x / p^k; throws PrecisionError unless every coordinate is divisible.
  /// The top k p-adic digits of the result are unknown and returned as 0.
  ZqElem divide_by_p_power(unsigned k) const;

  ZqElem zero_like() const;
  ZqElem one_like() const;
  ZqElem from_integer(std::int64_t k) const;
  ZqElem times(std::int64_t k) const;
  std::uint64_t characteristic() const;
  unsigned residue_characteristic() const;

  friend bool operator==(const ZqElem& a, const ZqElem& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

 private:
  friend class ZqRing;
  explicit ZqElem(const ZqRing& r) : ring_(&r) {}
  const ZqRing& checked(const ZqElem& o) const;

  const ZqRing* ring_ = nullptr;
  std::array<std::int64_t, kMaxLiftDegree> c_{};
};

/// Z_q / p^M with the lifted modulus taken coefficient-wise as least
/// nonnegative residues of the F_q modulus.  Interned per (field, M).
class ZqRing {
 public:
  ZqRing(const ZqRing&) = delete;
  ZqRing& operator=(const ZqRing&) = delete;

  static const ZqRing& get(const FqField& field, unsigned precision);

  const FqField& residue_field() const { return *field_; }
  unsigned prime() const { return field_->characteristic(); }
  unsigned degree() const { return field_->degree(); }
  unsigned precision() const { return precision_; }
  std::int64_t modulus() const { return pm_; }  // p^M

  ZqElem zero() const { return ZqElem(*this); }
  ZqElem one() const { return from_integer(1); }
  ZqElem from_integer(std::int64_t k) const;
  ZqElem from_coordinates(const std::vector<std::int64_t>& coords) const;

  /// Coordinate-wise least nonnegative residue lift.
  ZqElem lift(const FqElem& x) const;
  /// Teichmüller representative: the unique (q-1)-th root of unity (or 0)
  /// reducing to x.
  ZqElem teichmuller(const FqElem& x) const;
  FqElem reduce(const ZqElem& x) const;
  /// Image in a ring of lower precision over the same field.
  ZqElem reduce_to(const ZqElem& x, const ZqRing& coarser) const;

  // Internal arithmetic.
  std::int64_t mod(std::int64_t v) const {
    v %= pm_;
    return v < 0 ? v + pm_ : v;
  }
  void reduce_poly(std::array<std::int64_t, 2 * kMaxLiftDegree>& prod) const;

 private:
  ZqRing(const FqField& field, unsigned precision);

  const FqField* field_;
  unsigned precision_;
  std::int64_t pm_;
  std::vector<std::int64_t> lifted_modulus_;
  std::vector<ZqElem> teichmuller_;
};

/// Lift precision accepted by ZqRing: M >= 1 and p^M < 2^28.
unsigned max_lift_precision(unsigned p);

/// lift(x, M): least-residue lift into Z_q / p^M.  reduce(lift(x)) == x.
ZqElem lift(const FqElem& x, unsigned precision);
FqElem reduce(const ZqElem& x);

std::string to_string(const ZqElem& x);

}  // namespace asw
