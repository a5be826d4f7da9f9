#include "asw/witt.hpp"

namespace asw {

WittZq ghost_inverse(std::span<const ZqElem> w) {
  if (w.empty()) throw DomainError("ghost_inverse of an empty vector");
  const ZqRing& ring = w.front().ring();
  const unsigned p = ring.prime();
  const std::size_t n = w.size();
  if (ring.precision() < n) throw PrecisionError("lift precision too small for ghost inversion");
  // a_j is only known mod p^{M-j}, but it always enters multiplied by p^j.
  std::vector<ZqElem> a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ZqElem r = w[i];
    std::int64_t pj = 1;
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t e = 1;
      for (std::size_t k = j; k < i; ++k) e *= p;
      r -= a[j].pow(e).times(pj);
      pj *= p;
    }
    if (r.valuation() < i) throw PrecisionError("inexact division by p^" + std::to_string(i) + " in ghost inversion");
    a.push_back(r.divide_by_p_power(static_cast<unsigned>(i)));
  }
  const ZqRing& coarse = ZqRing::get(ring.residue_field(), ring.precision() - static_cast<unsigned>(n - 1));
  std::vector<ZqElem> out;
  out.reserve(n);
  for (const auto& x : a) out.push_back(ring.reduce_to(x, coarse));
  return WittZq(std::move(out));
}

WittFq wittvec_trace_vector(const WittFq& a) {
  const unsigned e = a.proto().field().degree();
  WittFq acc = a;
  WittFq conj = a;
  for (unsigned k = 1; k < e; ++k) {
    conj = frobenius(conj);
    acc = acc + conj;
  }
  return acc;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Teichmüller lift of a in F_p to Z/p^k.
std::uint64_t omega(unsigned a, unsigned p, std::size_t k) {
  const std::uint64_t mod = pow_u64(p, k);
  std::uint64_t x = a % mod;
  std::uint64_t r = x;
  for (std::size_t i = 1; i < k; ++i) {
    // r <- r^p
    std::uint64_t s = 1;
    for (unsigned j = 0; j < p; ++j) s = s * r % mod;
    r = s;
  }
  return r;
}

unsigned prime_field_value(const FqElem& x) {
  if (x.code() >= x.field().characteristic()) throw DomainError("Witt component outside the prime field");
  return x.code();
}

}  // namespace

std::uint64_t witt_fp_to_integer(const WittFq& a) {
  const unsigned p = a.prime();
  const std::size_t n = a.length();
  const std::uint64_t mod = pow_u64(p, n);
  std::uint64_t acc = 0;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    acc = (acc + pi * omega(prime_field_value(a[i]), p, n)) % mod;
    pi *= p;
  }
  return acc;
}

std::uint64_t wittvec_trace(const WittFq& a) { return witt_fp_to_integer(wittvec_trace_vector(a)); }

WittFq integer_to_witt_fp(std::uint64_t k, const FqField& field, std::size_t n) {
  const unsigned p = field.characteristic();
  std::vector<FqElem> c;
  c.reserve(n);
  std::uint64_t rest = k % pow_u64(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t len = n - i;
    const std::uint64_t mod = pow_u64(p, len);
    const unsigned digit = static_cast<unsigned>(rest % p);
    c.push_back(field.from_integer(digit));
    rest = ((rest + mod - omega(digit, p, len)) % mod) / p;
  }
  return WittFq(std::move(c));
}

TeichDecomposition teich_one_plus_decomp(const LaurentFq& a, std::size_t n) {
  if (a.valuation_bound() < 1) throw DomainError("teich_one_plus_decomp needs valuation >= 1");
  const WittK one = WittK::one(n, a);
  const WittK lifted = teichmuller(a.one_like() + a, n);
  return {one, lifted - one};
}

}  // namespace asw
