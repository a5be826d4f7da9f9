#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "asw/fq.hpp"
#include "asw/laurent.hpp"
#include "asw/witt.hpp"
#include "asw/zq.hpp"

namespace asw {

/// Field from "p=<prime>,e=<deg>[,modulus=<c0,...,ce>]".  Without a modulus
/// the Conway polynomial is used.
const FqField& parse_field_spec(std::string_view spec);
const FqField& field_from_params(unsigned p, unsigned e, const std::vector<unsigned>& modulus);
std::string field_spec_string(const FqField& field);

/// Laurent text, e.g. "2*t^-3 + g*t^-1 + 1 + O(t^10)".  `*` is optional,
/// `g` is the field generator, parentheses and integer powers are allowed.
/// Without an O(t^N) term the result is an exact Laurent polynomial.
LaurentFq parse_laurent(std::string_view text, const FqField& field);
FqElem parse_fq(std::string_view text, const FqField& field);
/// "(a0; a1; ...)"; each component is Laurent text.
WittK parse_witt(std::string_view text, const FqField& field);

namespace detail {

inline std::string coefficient_text(const std::string& c, bool multiplied) {
  if (!multiplied || c.find('+') == std::string::npos) return c;
  return "(" + c + ")";
}

}  // namespace detail

/// Canonical ascending-exponent form.
template <CoefficientRing R>
std::string to_string(const Laurent<R>& f) {
  std::vector<std::string> parts;
  if (!f.is_zero()) {
    const auto& c = f.stored();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      const int k = f.lowest_exponent() + static_cast<int>(i);
      std::string s = to_string(c[i]);
      if (k == 0) {
        parts.push_back(s);
        continue;
      }
      std::string mono = k == 1 ? "t" : "t^" + std::to_string(k);
      parts.push_back(s == "1" ? mono : detail::coefficient_text(s, true) + "*" + mono);
    }
  }
  if (!f.is_exact()) parts.push_back("O(t^" + std::to_string(f.precision()) + ")");
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

template <CoefficientRing R>
std::string to_string(const WittVec<R>& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) out += "; ";
    out += to_string(a[i]);
  }
  return out + ")";
}

}  // namespace asw
