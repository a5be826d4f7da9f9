#include <numeric>

#include "asw/asw_class.hpp"
#include "asw/error.hpp"
#include "asw/text.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace asw;

namespace {

WittK W(const char* s, const FqField& f) { return parse_witt(s, f); }

// (1-F)c
WittK coboundary(const WittK& c) { return c - frobenius(c); }

}  // namespace

TEST_SUITE("asw_class") {
  TEST_CASE("documented reductions") {
    const FqField& f2 = FqField::conway(2, 1);
    ASWClass x = reduce_class(W("(t^-2)", f2));
    CHECK(x.representative == W("(t^-1)", f2));
    CHECK(x.trail == W("(t^-1)", f2));
    x = reduce_class(W("(t^-1)", f2));
    CHECK(x.representative == W("(t^-1)", f2));
    CHECK(x.trail == W("(0)", f2));

    // trace-zero constant in F_4 dies; trail solves x - x^2 = c
    const FqField& f4 = FqField::conway(2, 2);
    for (const auto& c : f4.elements()) {
      if (fq_trace(c) != 0) continue;
      const ASWClass y = reduce_class(WittK({LaurentFq::constant(c)}));
      CHECK(y.representative[0].is_zero());
      const FqElem s = y.trail[0].coeff(0);
      CHECK(s - s * s == c);
    }
  }

  TEST_CASE("reduced form: shape, trail identity, idempotence") {
    gen::Gen g(71);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{
             {2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {2, 1, 3}, {5, 1, 1}, {3, 2, 1}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 40; ++i) {
        const WittK a = g.witt_k(f, n, -6, 3);
        const ASWClass x = reduce_class(a);
        REQUIRE(x.reduced);
        CHECK(is_reduced(x.representative));
        CHECK(a == x.representative + coboundary(x.trail));
        for (const auto& comp : x.representative.components()) {
          if (comp.is_zero()) continue;
          CHECK(comp.is_exact());
          for (int k = comp.lowest_exponent(); k <= comp.highest_exponent(); ++k) {
            if (comp.coeff(k).is_zero()) continue;
            CHECK(k <= 0);
            if (k < 0) CHECK(-k % static_cast<int>(p) != 0);
          }
        }
        CHECK(reduce_class(x.representative).representative == x.representative);
        CHECK(weighted_pole(x.representative) <= weighted_pole(a));
      }
    }
  }

  TEST_CASE("class representatives do not depend on the coset element") {
    gen::Gen g(73);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 1}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 40; ++i) {
        const WittK a = g.witt_k(f, n, -4, 2);
        const WittK c = g.witt_k(f, n, -3, 3);
        CHECK(reduce_class(a + coboundary(c)).representative == reduce_class(a).representative);
      }
    }
  }

  TEST_CASE("pivot order does not change the reduced form") {
    gen::Gen g(79);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 3}, {2, 2, 2}, {3, 1, 3}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 30; ++i) {
        const WittK a = g.witt_k(f, n, -8, 2);
        ReductionOptions r;
        r.order = PivotOrder::kRandom;
        r.seed = static_cast<std::uint64_t>(i);
        const ASWClass x = reduce_class(a), y = reduce_class(a, r);
        CHECK(x.representative == y.representative);
        CHECK(fil_level(x) == fil_level(y));
      }
    }
  }

  TEST_CASE("constants land in the k*[c0] transversal") {
    const FqField& f = FqField::conway(3, 2);
    const FqElem c0 = f.trace_nonzero_element();
    for (const auto& c : f.elements()) {
      const ASWClass x = reduce_class(WittK({LaurentFq::constant(c), LaurentFq(f.zero())}));
      const FqElem r0 = x.representative[0].is_zero() ? f.zero() : x.representative[0].coeff(0);
      // n = 2 constants: k*[c0]_2 for k in Z/9
      bool found = false;
      for (unsigned k = 0; k < 9 && !found; ++k)
        found = WittFq({r0, x.representative[1].is_zero() ? f.zero() : x.representative[1].coeff(0)}) ==
                scalar_multiple(teichmuller(c0, 2), k);
      CHECK(found);
    }
  }

  TEST_CASE("filtration levels") {
    const FqField& f2 = FqField::conway(2, 1);
    CHECK(fil_log_level(reduce_class(W("(1; 1)", f2))) == 0);
    CHECK(fil_log_level(reduced_class(W("(t^-1; 0)", f2))) == 2);
    CHECK(fil_log_level(reduced_class(W("(0; t^-1)", f2))) == 1);
    CHECK(fil_level(reduced_class(W("(t^-1)", f2))) == 2);
    CHECK(fil_level(reduce_class(W("(0; t^-2)", f2))) == 2);
    CHECK(fil_level(reduced_class(W("(0)", f2))) == 0);
    CHECK(fil_level(reduced_class(W("(1)", f2))) == 1);
    CHECK(fil_level(reduced_class(W("(t^-3)", f2))) == 4);
    CHECK(fil_level(reduced_class(W("(t^-1)", FqField::conway(3, 1)))) == 2);
    CHECK_THROWS_AS(reduced_class(W("(t^-2)", f2)), DomainError);
  }

  TEST_CASE("level inequalities on random classes") {
    gen::Gen g(83);
    for (auto [p, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 2}, {2, 3}, {5, 1}}) {
      const FqField& f = FqField::conway(p, 1);
      for (int i = 0; i < 60; ++i) {
        const ASWClass x = reduce_class(g.witt_k(f, n, -7, 1));
        const unsigned lg = fil_log_level(x), lv = fil_level(x);
        if (x.representative == WittK::zero(n, LaurentFq(f.zero()))) {
          CHECK(lv == 0);
          continue;
        }
        CHECK(lg <= lv);
        CHECK(lv <= lg + 1);
        if (std::gcd(lv, p) == 1) CHECK(lv == lg + 1);
      }
    }
  }

  TEST_CASE("enumeration sizes") {
    // fil^log_m W_n: component i carries the exponents -e, p^{n-1-i} e <= m, p ∤ e,
    // plus a constant in F_p c0 for the total; so |fil^log_m| = p^n * q^{#exponents}
    for (auto [p, e, n, m] : std::vector<std::tuple<unsigned, unsigned, std::size_t, unsigned>>{
             {2, 1, 1, 4}, {2, 2, 2, 5}, {3, 1, 2, 4}, {2, 1, 3, 6}}) {
      const FqField& f = FqField::conway(p, e);
      std::uint64_t exps = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned wgt = static_cast<unsigned>(oracle::ipow(p, static_cast<unsigned>(n - 1 - i)));
        for (unsigned k = 1; k * wgt <= m; ++k) exps += k % p != 0;
      }
      const auto reps = enumerate_fil_log(f, n, m);
      CHECK(reps.size() == oracle::ipow(p, static_cast<unsigned>(n)) * oracle::ipow(f.order(), static_cast<unsigned>(exps)));
      for (const auto& r : reps) {
        CHECK(is_reduced(r));
        CHECK(in_fil_log(r, m));
      }
    }
    CHECK(enumerate_pole_bounded(FqField::conway(2, 1), 1, 4).size() == 8);
  }
}
