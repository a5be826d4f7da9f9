#include "asw/error.hpp"
#include "asw/symbol.hpp"
#include "asw/text.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace asw;

namespace {

WittK W(const char* s, const FqField& f) { return parse_witt(s, f); }
LaurentFq L(const char* s, const FqField& f) { return parse_laurent(s, f); }

WittK constants(const WittFq& c) {
  std::vector<LaurentFq> out;
  for (const auto& x : c.components()) out.push_back(LaurentFq::constant(x));
  return WittK(std::move(out));
}

WittK truncate_witt(const WittK& a, std::size_t k) {
  return WittK(std::vector<LaurentFq>(a.components().begin(), a.components().begin() + static_cast<long>(k)));
}

}  // namespace

TEST_SUITE("symbol") {
  TEST_CASE("documented values") {
    const FqField& f2 = FqField::conway(2, 1);
    CHECK(sw_pair(W("(t^-1)", f2), L("1+t", f2)) == PairingValue{1, 2});
    CHECK(sw_pair(W("(0)", f2), L("t", f2)).is_zero());
    CHECK(sw_pair(W("(1)", f2), L("t", f2)) == PairingValue{1, 2});
    const FqField& f5 = FqField::conway(5, 1);
    for (unsigned c = 0; c < 5; ++c) {
      const FqElem cc = f5.from_integer(c);
      CHECK(sw_pair(WittK({LaurentFq::constant(cc)}), L("t", f5)).value == c);
      const LaurentFq b = LaurentFq::constant(f5.one()) + LaurentFq::monomial(cc, 1);
      CHECK(sw_pair(W("(t^-1)", f5), b).value == c);
    }
  }

  TEST_CASE("n = 1 agrees with the direct residue formula") {
    gen::Gen g(89);
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 100; ++i) {
        const LaurentFq a = g.poly(f, -6, 2), b = g.unit(f, 3, 5);
        const unsigned want = oracle::schmid(a, b);
        CHECK(sw_pair(WittK({a}), b).value == want);
        CHECK(schmid_residue_n1(a, b) == want);
      }
    }
  }

  TEST_CASE("unramified classes: [c, t) is the Witt trace") {
    gen::Gen g(97);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 2, 2}, {2, 1, 3}, {3, 2, 2}, {5, 1, 2}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 40; ++i) {
        const WittFq c = g.witt_fq(f, n);
        CHECK(sw_pair(constants(c), L("t", f)).value == wittvec_trace(c));
        // units of valuation 0 act trivially on unramified classes
        CHECK(sw_pair(constants(c), g.unit(f, 0, 4)).is_zero());
      }
    }
  }

  TEST_CASE("truncation and Verschiebung are compatible with Z/p^n -> Z/p^{n-1} and p*") {
    gen::Gen g(101);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {3, 1, 2}}) {
      const FqField& f = FqField::conway(p, e);
      const std::uint64_t small = oracle::ipow(p, static_cast<unsigned>(n - 1));
      for (int i = 0; i < 60; ++i) {
        const WittK a = g.witt_k(f, n, -5, 1);
        const LaurentFq b = g.unit(f, 2, 4);
        const PairingValue full = sw_pair(a, b);
        CHECK(sw_pair(truncate_witt(a, n - 1), b).value == full.value % small);
        const WittK a1 = g.witt_k(f, n - 1, -5, 1);
        CHECK(sw_pair(verschiebung(a1), b).value == p * sw_pair(a1, b).value);
      }
    }
  }

  TEST_CASE("well-defined and bilinear") {
    gen::Gen g(103);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 1}, {2, 1, 3}}) {
      const FqField& f = FqField::conway(p, e);
      const std::uint64_t pn = oracle::ipow(p, static_cast<unsigned>(n));
      unsigned nonzero = 0;
      for (int i = 0; i < 60; ++i) {
        const WittK a = g.witt_k(f, n, -5, 1), a2 = g.witt_k(f, n, -4, 2), c = g.witt_k(f, n, -3, 2);
        const LaurentFq b = g.unit(f, 2, 4), b2 = g.unit(f, 2, 4), d = g.unit(f, 1, 3);
        const PairingValue v = sw_pair(a, b);
        nonzero += !v.is_zero();
        CHECK(v.modulus == pn);
        CHECK(v.value < pn);
        CHECK(sw_pair(a + c - frobenius(c), b) == v);
        CHECK(sw_pair(a, b * d.pow(pn)) == v);
        CHECK(sw_pair(a + a2, b).value == (v.value + sw_pair(a2, b).value) % pn);
        CHECK(sw_pair(a, b * b2).value == (v.value + sw_pair(a, b2).value) % pn);
      }
      CAPTURE(p); CAPTURE(e); CAPTURE(n);
      CHECK(nonzero > 10);  // the checks above are not vacuous
    }
  }

  TEST_CASE("independent of lift precision, series precision and lift choice") {
    gen::Gen g(107);
    const FqField& f = FqField::conway(3, 1);
    for (int i = 0; i < 60; ++i) {
      const WittK a = g.witt_k(f, 2, -6, 1);
      const LaurentFq b = g.unit(f, 2, 5);
      const PairingValue v = sw_pair(a, b);
      PairingOptions o;
      o.lift_precision = 6;
      CHECK(sw_pair(a, b, o) == v);
      o = {};
      o.extra_series_precision = 20;
      CHECK(sw_pair(a, b, o) == v);
      o = {};
      o.teichmuller_lift = false;
      CHECK(sw_pair(a, b, o) == v);
    }
  }

  TEST_CASE("errors") {
    const FqField& f = FqField::conway(2, 1);
    CHECK_THROWS_AS(sw_pair(W("(t^-1)", f), LaurentFq(f.zero())), DomainError);
    CHECK_THROWS_AS(sw_pair(W("(t^-3 + O(t^-2))", f), L("1+t", f)), PrecisionError);
  }
}
