#pragma once

#include <cstdint>
#include <vector>

#include "asw/witt.hpp"

namespace asw {

/// A class in W_n(K)/(1-F)W_n(K) with its reduced representative.
///
/// Reduced means: every component is a Laurent polynomial whose terms are
/// c t^{-e} with e > 0 prime to p, plus a constant in F_p * c0 where c0 is
/// the field's fixed element of nonzero trace.  The trail c satisfies
/// input = representative + (1-F)c.
struct ASWClass {
  WittK representative;
  WittK trail;
  bool reduced = false;

  const FqField& field() const { return representative.proto().proto().field(); }
  std::size_t length() const { return representative.length(); }
};

enum class PivotOrder {
  kComponentMajor,  // component 0 first, each component finished before the next
  kRandom,          // random pending component at every step
};

struct ReductionOptions {
  PivotOrder order = PivotOrder::kComponentMajor;
  std::uint64_t seed = 0;
  /// Recompute input == rep + (1-F)trail after reducing (cheap at desk scale).
  bool check_trail = true;
};

/// Reduce a. Components must be known beyond t^{L}, L = weighted pole of a.
ASWClass reduce_class(const WittK& a, const ReductionOptions& options = {});
/// Wrap a representative already in reduced form (trail zero); throws
/// DomainError if it is not.
ASWClass reduced_class(const WittK& rep);
bool is_reduced(const WittK& a);

/// max_i p^{n-1-i} * pole(a_i), on any Witt vector.
unsigned weighted_pole(const WittK& a);
/// Brylinski-Kato level of a reduced class.
unsigned fil_log_level(const ASWClass& x);
bool in_fil_log(const WittK& rep, unsigned m);
/// Matsuda fil_m on a representative, m >= 1: with n' = min(n, ord_p(m)),
/// (a_0..a_{n-n'-1}, 0..) in fil^log_{m-1} and (a_{n-n'}..a_{n-1}) in
/// fil^log_m W_{n'}.
bool in_fil(const WittK& rep, unsigned m);
/// 0 for the zero class, otherwise the least m >= 1 with rep in fil_m.
unsigned fil_level(const ASWClass& x);

/// Reduced representatives whose component i has pole order at most
/// max_pole[i]; mixed-radix order, component 0 varying slowest.
std::vector<WittK> enumerate_reduced(const FqField& field, const std::vector<unsigned>& max_pole);
/// Reduced representatives of fil^log_m W_n.
std::vector<WittK> enumerate_fil_log(const FqField& field, std::size_t n, unsigned m);
/// Reduced representatives with every component's pole order <= pole_bound.
std::vector<WittK> enumerate_pole_bounded(const FqField& field, std::size_t n, unsigned pole_bound);

/// ord_p(m) for m >= 1.
unsigned p_adic_order(unsigned m, unsigned p);

}  // namespace asw
