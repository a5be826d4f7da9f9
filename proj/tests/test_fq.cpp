#include <map>
#include <set>

#include "asw/error.hpp"
#include "asw/fq.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace asw;

namespace {

const std::vector<std::pair<unsigned, unsigned>> kFields = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2},
                                                            {3, 3}, {5, 1}, {5, 2}, {5, 3}};

unsigned multiplicative_order(const FqElem& x) {
  unsigned k = 1;
  for (FqElem y = x; !y.is_one(); y *= x) ++k;
  return k;
}

}  // namespace

TEST_SUITE("fq") {
  TEST_CASE("Conway moduli match the standard tables") {
    // x + 3, x^2 + 4x + 2, x^3 + 3x + 3 over F_5 and friends (constant term first)
    const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> known = {
        {{2, 2}, {1, 1, 1}}, {{2, 3}, {1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}}, {{3, 3}, {1, 2, 0, 1}},
        {{5, 1}, {3, 1}},    {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}}};
    for (const auto& [pe, coeffs] : known) {
      const FqField& f = FqField::conway(pe.first, pe.second);
      const auto m = f.modulus();
      CHECK(std::vector<unsigned>(m.begin(), m.end()) == coeffs);
    }
  }

  TEST_CASE("the generator is primitive") {
    for (auto [p, e] : kFields) {
      const FqField& f = FqField::conway(p, e);
      CAPTURE(f.order());
      CHECK(multiplicative_order(f.generator()) == f.order() - 1);
    }
  }

  TEST_CASE("field axioms, exhaustive for q <= 27") {
    for (auto [p, e] : kFields) {
      const FqField& f = FqField::conway(p, e);
      if (f.order() > 27) continue;
      const auto els = f.elements();
      REQUIRE(els.size() == f.order());
      for (const auto& a : els) {
        CHECK(a + (-a) == f.zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
        for (const auto& b : els) {
          CHECK(a + b == b + a);
          CHECK(a * b == b * a);
          CHECK(a - b + b == a);
          if (!b.is_zero()) CHECK((a / b) * b == a);
          CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        }
      }
      for (std::size_t i = 0; i < els.size(); i += 3)
        for (std::size_t j = 0; j < els.size(); j += 2)
          for (std::size_t k = 0; k < els.size(); ++k) {
            CHECK((els[i] * els[j]) * els[k] == els[i] * (els[j] * els[k]));
            CHECK(els[i] * (els[j] + els[k]) == els[i] * els[j] + els[i] * els[k]);
          }
    }
  }

  TEST_CASE("Frobenius has order e and frobenius_inverse undoes it") {
    for (auto [p, e] : kFields) {
      const FqField& f = FqField::conway(p, e);
      for (const auto& a : f.elements()) {
        FqElem y = a;
        for (unsigned i = 0; i < e; ++i) y = y.frobenius();
        CHECK(y == a);
        CHECK(a.frobenius_inverse().frobenius() == a);
        CHECK(a.frobenius() == a.pow(p));
      }
    }
  }

  TEST_CASE("trace is F_p-linear, surjective, and matches the orbit sum") {
    for (auto [p, e] : kFields) {
      const FqField& f = FqField::conway(p, e);
      std::set<unsigned> image;
      for (const auto& a : f.elements()) {
        CHECK(fq_trace(a) == oracle::trace(a));
        CHECK(fq_trace(a.times(2)) == (2 * fq_trace(a)) % p);
        image.insert(fq_trace(a));
      }
      CHECK(image.size() == p);
      CHECK(fq_trace(f.trace_nonzero_element()) != 0);
    }
  }

  TEST_CASE("prime field basis spans F_q") {
    const FqField& f = FqField::conway(3, 2);
    const auto basis = f.prime_field_basis();
    REQUIRE(basis.size() == 2);
    std::set<std::uint32_t> span;
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b) span.insert((basis[0].times(a) + basis[1].times(b)).code());
    CHECK(span.size() == 9);
  }

  TEST_CASE("custom modulus and rejection of reducible ones") {
    const FqField& f = FqField::with_modulus(3, {1, 0, 1});  // x^2 + 1
    CHECK(f.order() == 9);
    CHECK(f.generator() * f.generator() == -f.one());
    CHECK_THROWS_AS(FqField::with_modulus(2, {1, 0, 1}), DomainError);  // (x+1)^2
    CHECK_THROWS_AS(FqField::conway(7, 1), DomainError);
  }

  TEST_CASE("mixing fields is an error") {
    const FqField& a = FqField::conway(2, 2);
    const FqField& b = FqField::conway(2, 3);
    CHECK_THROWS_AS(a.one() + b.one(), DomainError);
  }

  TEST_CASE("printing") {
    const FqField& f = FqField::conway(2, 2);
    CHECK(to_string(f.generator()) == "g");
    CHECK(to_string(f.generator() + f.one()) == "g+1");
    CHECK(to_string(f.zero()) == "0");
  }
}
