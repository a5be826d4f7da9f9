#include "asw/error.hpp"
#include "asw/zq.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace asw;

TEST_SUITE("zq") {
  TEST_CASE("reduce(lift(x)) = x and the lift is a ring map mod p") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {5, 1}, {2, 3}}) {
      const FqField& f = FqField::conway(p, e);
      const ZqRing& r = ZqRing::get(f, 4);
      for (const auto& x : f.elements()) {
        CHECK(r.reduce(r.lift(x)) == x);
        CHECK(r.reduce(r.teichmuller(x)) == x);
        for (const auto& y : f.elements()) CHECK(r.reduce(r.lift(x) * r.lift(y)) == x * y);
      }
    }
  }

  TEST_CASE("Teichmuller lifts are multiplicative and fixed by x -> x^q") {
    const FqField& f = FqField::conway(3, 2);
    const ZqRing& r = ZqRing::get(f, 5);
    for (const auto& x : f.elements()) {
      const ZqElem w = r.teichmuller(x);
      CHECK(w.pow(f.order()) == w);
      for (const auto& y : f.elements()) CHECK(r.teichmuller(x * y) == w * r.teichmuller(y));
    }
  }

  TEST_CASE("Teichmuller over Z/p^M agrees with a^{p^{M-1}}") {
    for (unsigned p : {2u, 3u, 5u}) {
      const FqField& f = FqField::conway(p, 1);
      const unsigned m = 4;
      const ZqRing& r = ZqRing::get(f, m);
      for (unsigned a = 0; a < p; ++a)
        CHECK(static_cast<std::uint64_t>(r.teichmuller(f.from_integer(a)).coordinate(0)) == oracle::teich(a, p, m));
    }
  }

  TEST_CASE("ring laws on random elements") {
    gen::Gen g(11);
    const ZqRing& r = ZqRing::get(FqField::conway(2, 3), 6);
    for (int i = 0; i < 300; ++i) {
      const ZqElem a = g.zq(r), b = g.zq(r), c = g.zq(r);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - b + b == a);
      if (a.is_unit()) CHECK(a * a.inverse() == r.one());
    }
  }

  TEST_CASE("valuation and exact division by p^k") {
    const ZqRing& r = ZqRing::get(FqField::conway(3, 2), 5);
    const ZqElem x = r.from_coordinates({9, 18});
    CHECK(x.valuation() == 2);
    CHECK(x.divide_by_p_power(2) == r.from_coordinates({1, 2}));
    CHECK_THROWS_AS(x.divide_by_p_power(3), PrecisionError);
    CHECK(r.zero().valuation() == 5);
    CHECK_FALSE(r.from_integer(3).is_unit());
    CHECK_THROWS_AS(r.from_integer(3).inverse(), DomainError);
  }

  TEST_CASE("reduce_to a coarser precision") {
    const FqField& f = FqField::conway(2, 1);
    const ZqRing& fine = ZqRing::get(f, 6);
    const ZqRing& coarse = ZqRing::get(f, 3);
    CHECK(fine.reduce_to(fine.from_integer(13), coarse) == coarse.from_integer(5));
  }

  TEST_CASE("precision is capped so p^M fits") {
    CHECK_THROWS_AS(ZqRing::get(FqField::conway(2, 1), max_lift_precision(2) + 1), DomainError);
  }
}
