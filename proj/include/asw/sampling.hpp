#pragma once

#include <cstdint>
#include <random>

#include "asw/witt.hpp"

namespace asw {

/// Random inputs for the built-in verification suites.  Deterministic for a
/// given seed (std::mt19937_64 and explicit modular reduction only, so the
/// stream does not depend on the standard library's distributions).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound ? rng_() % bound : 0; }
  int in_range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  FqElem fq(const FqField& f) { return f.element(static_cast<std::uint32_t>(below(f.order()))); }
  FqElem fq_nonzero(const FqField& f) { return f.element(static_cast<std::uint32_t>(1 + below(f.order() - 1))); }
  ZqElem zq(const ZqRing& r) {
    std::vector<std::int64_t> c(r.degree());
    for (auto& x : c) x = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(r.modulus())));
    return r.from_coordinates(c);
  }

  /// Exact polynomial with independent coefficients at t^lo..t^hi.
  LaurentFq laurent(const FqField& f, int lo, int hi) {
    std::vector<FqElem> c;
    for (int k = lo; k <= hi; ++k) c.push_back(fq(f));
    return LaurentFq::from_terms(f.zero(), lo, std::move(c));
  }
  /// t^k (u0 + c_1 t + ... + c_deg t^deg) with u0 != 0, k in [-kmax, kmax].
  LaurentFq unit(const FqField& f, int kmax, int deg) {
    std::vector<FqElem> c{fq_nonzero(f)};
    for (int k = 1; k <= deg; ++k) c.push_back(fq(f));
    return LaurentFq::from_terms(f.zero(), in_range(-kmax, kmax), std::move(c));
  }

  WittFq witt_fq(const FqField& f, std::size_t n) {
    std::vector<FqElem> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(fq(f));
    return WittFq(std::move(c));
  }
  WittZq witt_zq(const ZqRing& r, std::size_t n) {
    std::vector<ZqElem> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(zq(r));
    return WittZq(std::move(c));
  }
  WittK witt_k(const FqField& f, std::size_t n, int lo, int hi) {
    std::vector<LaurentFq> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(laurent(f, lo, hi));
    return WittK(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace asw
