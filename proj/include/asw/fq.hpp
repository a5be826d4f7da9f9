#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace asw {

class FqField;

/// Element of a finite field F_q, q = p^e.  The element is stored as the
/// integer sum c_k p^k of its coordinates in the basis 1, g, ..., g^{e-1}.
/// An element borrows its field; fields are interned and live for the
/// whole process.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FqField& field, std::uint32_t code);

  const FqField& field() const { return *field_; }
  bool valid() const { return field_ != nullptr; }
  std::uint32_t code() const { return code_; }
  unsigned coordinate(unsigned k) const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const;
  bool is_unit() const { return code_ != 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  FqElem inverse() const;
  FqElem pow(std::uint64_t e) const;
  FqElem frobenius() const;          // x^p
  FqElem frobenius_inverse() const;  // x^{1/p}

  // Ring interface shared with the other coefficient types.
  FqElem zero_like() const;
  FqElem one_like() const;
  FqElem from_integer(std::int64_t k) const;
  FqElem times(std::int64_t k) const;
  std::uint64_t characteristic() const;
  unsigned residue_characteristic() const;

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  const FqField& checked(const FqElem& o) const;

  const FqField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

class FqField {
 public:
  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

  /// Field defined by the Conway polynomial; p in {2,3,5}, e <= 3.
  static const FqField& conway(unsigned p, unsigned e);
  /// Field defined by a user modulus c_0 + c_1 x + ... + c_e x^e (monic).
  /// Throws DomainError if p is not prime or the modulus is reducible.
  static const FqField& with_modulus(unsigned p, std::vector<unsigned> modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  std::span<const unsigned> modulus() const { return modulus_; }

  FqElem zero() const { return FqElem(*this, 0); }
  FqElem one() const { return FqElem(*this, 1); }
  /// Class of x modulo the defining polynomial.
  FqElem generator() const;
  FqElem element(std::uint32_t code) const;
  FqElem from_integer(std::int64_t k) const;
  FqElem from_coordinates(std::span<const unsigned> coords) const;
  std::vector<FqElem> elements() const;
  /// 1, g, ..., g^{e-1}: an F_p-basis.
  std::vector<FqElem> prime_field_basis() const;
  /// Fixed element c0 with tr(c0) != 0: 1 when p does not divide e,
  /// otherwise the first element in code order with nonzero trace.
  FqElem trace_nonzero_element() const { return FqElem(*this, trace_unit_); }

  // Internal arithmetic on codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::uint64_t e) const;

 private:
  friend class FqElem;
  FqField(unsigned p, std::vector<unsigned> modulus);
  std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b) const;

  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^k, k = 0..e
  std::vector<std::uint32_t> exp_;    // powers of a primitive element
  std::vector<std::uint32_t> log_;
  std::uint32_t trace_unit_ = 1;
};

/// Absolute trace x + x^p + ... + x^{p^{e-1}}, returned as an integer in [0, p).
unsigned fq_trace(const FqElem& x);

bool is_prime(std::uint64_t n);
/// Irreducibility of a polynomial over F_p given by ascending coefficients.
bool is_irreducible_mod_p(unsigned p, std::span<const unsigned> coeffs);

std::string to_string(const FqElem& x);

}  // namespace asw
