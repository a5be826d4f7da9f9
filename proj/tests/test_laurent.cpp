#include <algorithm>

#include "asw/error.hpp"
#include "asw/laurent.hpp"
#include "asw/text.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace asw;

namespace {

const FqField& F2() { return FqField::conway(2, 1); }
LaurentFq t_pow(const FqField& f, int k) { return LaurentFq::monomial(f.one(), k); }
LaurentFq L(const char* s, const FqField& f) { return parse_laurent(s, f); }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("basic arithmetic") {
    const FqField& f = FqField::conway(3, 1);
    CHECK((L("t^-1 + 1", f) * t_pow(f, 1)) == L("1 + t", f));
    const LaurentFq inv = divide(LaurentFq::constant(f.one()), L("1 + t", f), 6);
    CHECK(inv == L("1 - t + t^2 - t^3 + t^4 - t^5 + O(t^6)", f));
    CHECK(inv.precision() == 6);
    CHECK(L("1 + t", F2()).pow(2) == L("1 + t^2", F2()));
  }

  TEST_CASE("precision propagation") {
    const FqField& f = F2();
    const LaurentFq a = L("t^-2 + 1 + O(t^3)", f);
    const LaurentFq b = L("t + O(t^5)", f);
    CHECK((a + b).precision() == 3);
    CHECK((a * b).precision() == 3);  // min(3 + 1, 5 - 2)
    CHECK((a * LaurentFq::monomial(f.one(), 2)).precision() == 5);
    CHECK_THROWS_AS(a.coeff(3), PrecisionError);
    CHECK(a.valuation() == -2);
    CHECK_FALSE(L("O(t^4)", f).valuation().has_value());
    CHECK(L("O(t^4)", f).valuation_bound() == 4);
  }

  TEST_CASE("division errors") {
    const FqField& f = F2();
    CHECK_THROWS_AS(divide(LaurentFq::constant(f.one()), L("O(t^3)", f)), DomainError);
    const ZqRing& r = ZqRing::get(f, 3);
    const LaurentZq two = LaurentZq::constant(r.from_integer(2));
    CHECK_THROWS_AS(divide(LaurentZq::constant(r.one()), two), DomainError);
  }

  TEST_CASE("residue examples") {
    const FqField& f = FqField::conway(5, 1);
    CHECK(residue(t_pow(f, -1)) == f.one());
    CHECK(residue(L("t^2 + 3", f)) == f.zero());
    const FqElem c = f.from_integer(3);
    const LaurentFq x = divide(LaurentFq::monomial(c, -1), LaurentFq::constant(f.one()) + LaurentFq::monomial(c, 1), 5);
    CHECK(residue(x) == c);
    CHECK_THROWS_AS(residue(L("t^-3 + O(t^-1)", f)), PrecisionError);
  }

  TEST_CASE("dlog examples") {
    const FqField& f = FqField::conway(3, 1);
    CHECK(dlog(t_pow(f, 1)) == t_pow(f, -1));
    CHECK(dlog(L("1 + t", f), 5) == L("1 - t + t^2 - t^3 + t^4 + O(t^5)", f));
    CHECK(dlog(t_pow(f, 2)) == LaurentFq::monomial(f.from_integer(2), -1));
    CHECK(dlog(t_pow(F2(), 2)).is_zero());
    CHECK_THROWS_AS(dlog(LaurentFq(f.zero())), DomainError);
  }

  TEST_CASE("Frobenius on series") {
    CHECK(L("t^-1 + 1", F2()).frobenius() == L("t^-2 + 1", F2()));
    const FqField& f3 = FqField::conway(3, 1);
    CHECK(L("2*t", f3).frobenius() == L("2*t^3", f3));
    CHECK(L("1 + t + O(t^4)", f3).frobenius().precision() == 12);
    gen::Gen g(3);
    const FqField& f = FqField::conway(2, 2);
    for (int i = 0; i < 100; ++i) {
      const LaurentFq a = g.poly(f, -3, 3), b = g.poly(f, -2, 4);
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }

  TEST_CASE("residue of a derivative vanishes") {
    gen::Gen g(5);
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 50; ++i) CHECK(residue(g.series(f, -6, 4).derivative()).is_zero());
    }
  }

  TEST_CASE("dlog is additive and units have zero residue") {
    const FqField& f = FqField::conway(3, 1);
    // all b = t^v (u0 + u1 t + u2 t^2) with small support
    std::vector<LaurentFq> units;
    for (int v = -1; v <= 1; ++v)
      for (std::uint32_t a0 = 1; a0 < 3; ++a0)
        for (std::uint32_t a1 = 0; a1 < 3; ++a1)
          for (std::uint32_t a2 = 0; a2 < 3; ++a2)
            units.push_back(LaurentFq::from_terms(f.zero(), v, {f.element(a0), f.element(a1), f.element(a2)}));
    for (const auto& b : units) {
      CHECK(residue(dlog(b, 4)) == f.from_integer(b.lowest_exponent()));
      for (std::size_t j = 0; j < units.size(); j += 7) {
        const auto& c = units[j];
        CHECK(dlog(b * c, 6) == (dlog(b, 6) + dlog(c, 6)));
      }
    }
  }

  TEST_CASE("raising the precision does not change reported coefficients") {
    gen::Gen g(9);
    const FqField& f = FqField::conway(2, 2);
    for (int i = 0; i < 100; ++i) {
      const LaurentFq b = g.unit(f, 2, 4);
      const LaurentFq lo = dlog(b, 4), hi = dlog(b, 12);
      // a constant unit gives an exact zero
      for (int k = lo.lowest_exponent(); k < std::min(lo.precision(), 4); ++k) CHECK(lo.coeff(k) == hi.coeff(k));
    }
  }

  TEST_CASE("residue(f dlog t) is the constant coefficient") {
    gen::Gen g(13);
    const FqField& f = FqField::conway(5, 1);
    for (int i = 0; i < 50; ++i) {
      const LaurentFq a = g.poly(f, -4, 4);
      CHECK(residue(a * dlog(t_pow(f, 1))) == a.coeff(0));
      CHECK(residue_of_product(a, dlog(t_pow(f, 1))) == a.coeff(0));
    }
  }

  TEST_CASE("residue_of_product equals residue of the product") {
    gen::Gen g(17);
    const FqField& f = FqField::conway(3, 2);
    for (int i = 0; i < 100; ++i) {
      const LaurentFq a = g.poly(f, -5, 2), b = g.series(f, -2, 6);
      CHECK(residue_of_product(a, b) == residue(a * b));
    }
  }
}
