#include "asw/conductor.hpp"
#include "asw/reports.hpp"
#include "asw/text.hpp"
#include "asw/unit_group.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace asw;

namespace {

ASWClass C(const char* s, const FqField& f) { return reduce_class(parse_witt(s, f)); }

// Brute-force dual conductor: least m with [x, u) = 0 for every u in the
// image of U^m inside G_{n, M}, M past the ghost-pole bound.
unsigned dual_by_group(const ASWClass& x) {
  const FqField& f = x.field();
  const unsigned top = fil_log_level(x) + 2;
  const UnitQuot g(f, x.length(), top);
  unsigned m = top;
  while (m > 0) {
    bool kills = true;
    for (const auto& u : g.elements()) {
      if (!g.in_unit_image(u, m - 1)) continue;
      if (!sw_pair(x.representative, g.representative(u)).is_zero()) {
        kills = false;
        break;
      }
    }
    if (!kills) break;
    --m;
  }
  return m;
}

}  // namespace

TEST_SUITE("conductor") {
  TEST_CASE("documented conductors") {
    const FqField& f2 = FqField::conway(2, 1);
    ConductorRow r = conductor_row(C("(t^-2)", f2));
    CHECK(r.fil == 2);
    CHECK(r.dual == 2);
    r = conductor_row(C("(1)", f2));
    CHECK(r.fil == 1);
    CHECK(r.dual == 0);
    CHECK(r.boundary());
    CHECK(r.agree());
    r = conductor_row(C("(0)", f2));
    CHECK(r.fil == 0);
    CHECK(r.dual == 0);
    CHECK(conductor_fil(C("(t^-3)", f2)) == 4);
    CHECK(conductor_dual(C("(t^-3)", f2)) == 4);
    CHECK(conductor_dual(C("(t^-1)", FqField::conway(3, 1))) == 2);
  }

  TEST_CASE("dual conductor matches a search over the whole unit group") {
    gen::Gen g(109);
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {2, 2, 1}}) {
      const FqField& f = FqField::conway(p, e);
      for (int i = 0; i < 15; ++i) {
        const ASWClass x = reduce_class(g.witt_k(f, n, -3, 1));
        CHECK(conductor_dual(x) == dual_by_group(x));
      }
    }
  }

  TEST_CASE("dual conductor never exceeds fil_log + 1") {
    gen::Gen g(113);
    const FqField& f = FqField::conway(2, 1);
    for (int i = 0; i < 40; ++i) {
      const ASWClass x = reduce_class(g.witt_k(f, 3, -6, 1));
      CHECK(conductor_dual(x) <= fil_log_level(x) + 1);
    }
  }

  TEST_CASE("filagree on the acceptance grid is clean") {
    for (auto [p, e, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 1}, {2, 1, 2}, {3, 1, 1}}) {
      const FilagreeReport r = filagree_report(FqField::conway(p, e), n, 4, 1);
      CHECK(r.passed());
      CHECK(r.mismatches.empty());
      // the nonzero unramified classes k*[c0], k = 1..p^n-1
      CHECK(r.boundary_cases == oracle::ipow(p, static_cast<unsigned>(n)) - 1);
    }
  }
}
