#pragma once
// Hand-rolled random generators for the property tests.  Kept apart from the
// library's Sampler so a bug there cannot hide itself.

#include <cstdint>
#include <random>
#include <vector>

#include "asw/laurent.hpp"
#include "asw/witt.hpp"
#include "asw/zq.hpp"

namespace gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t below(std::uint64_t n) {
    // rejection sampling, no modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = rng_(); while (x >= limit);
    return x % n;
  }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin(unsigned percent = 50) { return below(100) < percent; }

  asw::FqElem fq(const asw::FqField& f) { return f.element(static_cast<std::uint32_t>(below(f.order()))); }
  asw::FqElem fq_nonzero(const asw::FqField& f) {
    return f.element(static_cast<std::uint32_t>(1 + below(f.order() - 1)));
  }
  // sparse: each coefficient is zero with probability 1/2
  asw::FqElem fq_sparse(const asw::FqField& f) { return coin() ? f.zero() : fq_nonzero(f); }

  asw::ZqElem zq(const asw::ZqRing& r) {
    std::vector<std::int64_t> c(r.degree());
    for (auto& x : c) x = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(r.modulus())));
    return r.from_coordinates(c);
  }

  asw::LaurentFq poly(const asw::FqField& f, int lo, int hi) {
    std::vector<asw::FqElem> c;
    for (int k = lo; k <= hi; ++k) c.push_back(fq_sparse(f));
    return asw::LaurentFq::from_terms(f.zero(), lo, std::move(c));
  }
  asw::LaurentFq series(const asw::FqField& f, int lo, int prec) {
    std::vector<asw::FqElem> c;
    for (int k = lo; k < prec; ++k) c.push_back(fq(f));
    return asw::LaurentFq::from_terms(f.zero(), lo, std::move(c), prec);
  }
  // t^k * (nonzero constant + ...), exact
  asw::LaurentFq unit(const asw::FqField& f, int kmax = 2, int deg = 3) {
    std::vector<asw::FqElem> c{fq_nonzero(f)};
    for (int k = 1; k <= deg; ++k) c.push_back(fq_sparse(f));
    return asw::LaurentFq::from_terms(f.zero(), range(-kmax, kmax), std::move(c));
  }

  asw::WittFq witt_fq(const asw::FqField& f, std::size_t n) {
    std::vector<asw::FqElem> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(fq(f));
    return asw::WittFq(std::move(c));
  }
  asw::WittZq witt_zq(const asw::ZqRing& r, std::size_t n) {
    std::vector<asw::ZqElem> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(zq(r));
    return asw::WittZq(std::move(c));
  }
  asw::WittK witt_k(const asw::FqField& f, std::size_t n, int lo, int hi) {
    std::vector<asw::LaurentFq> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(poly(f, lo, hi));
    return asw::WittK(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
