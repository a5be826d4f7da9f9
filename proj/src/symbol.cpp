#include "asw/symbol.hpp"

#include <algorithm>

#include "asw/error.hpp"

namespace asw {

namespace {

LaurentZq lift_series(const LaurentFq& f, const ZqRing& ring, bool teichmuller) {
  return f.map_coefficients(
      [&](const FqElem& c) { return teichmuller ? ring.teichmuller(c) : ring.lift(c); }, ring.zero());
}

}  // namespace

const ZqRing& pairing_ring(const FqField& field, std::size_t n, const PairingOptions& options) {
  const unsigned m = options.lift_precision ? options.lift_precision : static_cast<unsigned>(2 * n);
  if (m < n) throw DomainError("lift precision must be at least n");
  return ZqRing::get(field, m);
}

LiftedCharacter prepare_character(const WittK& a, const PairingOptions& options) {
  const FqField& field = a.proto().proto().field();
  LiftedCharacter out;
  out.n = a.length();
  out.ring = &pairing_ring(field, out.n, options);
  std::vector<LaurentZq> comps;
  for (const auto& x : a.components()) comps.push_back(lift_series(x, *out.ring, options.teichmuller_lift));
  out.ghosts = ghost(WittVec<LaurentZq>(std::move(comps)));
  for (const auto& g : out.ghosts) out.max_pole = std::max(out.max_pole, g.pole_order());
  return out;
}

LiftedUnit prepare_unit(const LaurentFq& b, const ZqRing& ring, int max_pole, const PairingOptions& options) {
  if (b.is_zero()) throw DomainError("symbol needs b != 0");
  return {&ring, dlog(lift_series(b, ring, options.teichmuller_lift), max_pole + options.extra_series_precision)};
}

LiftedUnit prepare_unit(const LaurentFq& b, const LiftedCharacter& against, const PairingOptions& options) {
  return prepare_unit(b, *against.ring, against.max_pole, options);
}

PairingValue pair_prepared(const LiftedCharacter& a, const LiftedUnit& b) {
  if (a.ring != b.ring) throw DomainError("character and unit lifted to different rings");
  const ZqRing& ring = *a.ring;
  const unsigned p = ring.prime();
  const std::size_t n = a.n;
  // Ghost inversion mod p: a_i = (r_i - sum_{j<i} p^j a_j^{p^{i-j}}) / p^i.
  std::vector<ZqElem> rho;
  std::vector<FqElem> digits;
  rho.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ZqElem r = residue_of_product(a.ghosts[i], b.dlog);
    std::int64_t pj = 1;
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t e = 1;
      for (std::size_t k = j; k < i; ++k) e *= p;
      r -= rho[j].pow(e).times(pj);
      pj *= p;
    }
    if (r.valuation() < i)
      throw PrecisionError("inexact division by p^" + std::to_string(i) + " in the symbol's ghost inversion");
    rho.push_back(r.divide_by_p_power(static_cast<unsigned>(i)));
    digits.push_back(ring.reduce(rho.back()));
  }
  std::uint64_t mod = 1;
  for (std::size_t i = 0; i < n; ++i) mod *= p;
  return {wittvec_trace(WittFq(std::move(digits))), mod};
}

PairingValue sw_pair(const WittK& a, const LaurentFq& b, const PairingOptions& options) {
  const LiftedCharacter ch = prepare_character(a, options);
  return pair_prepared(ch, prepare_unit(b, ch, options));
}

std::uint64_t schmid_residue_n1(const LaurentFq& a, const LaurentFq& b) {
  return fq_trace(residue_of_product(a, dlog(b, a.pole_order())));
}

}  // namespace asw
