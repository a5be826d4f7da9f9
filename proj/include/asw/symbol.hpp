#pragma once

#include <cstdint>
#include <vector>

#include "asw/witt.hpp"

namespace asw {

/// Element of Z/p^n, read through W_n(F_p) = Z/p^n with [1] -> 1.
struct PairingValue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;

  bool is_zero() const { return value == 0; }
  friend bool operator==(const PairingValue&, const PairingValue&) = default;
};

struct PairingOptions {
  /// p-adic lift precision M; 0 selects M = 2n.
  unsigned lift_precision = 0;
  /// Extra coefficients of dlog(b) beyond the largest ghost pole.
  int extra_series_precision = 0;
  /// Teichmüller lift of coefficients (otherwise least residues).
  bool teichmuller_lift = true;
};

/// Ghost components of the coefficient-wise lift of a character a.
struct LiftedCharacter {
  const ZqRing* ring = nullptr;
  std::size_t n = 0;
  std::vector<LaurentZq> ghosts;
  int max_pole = 0;
};

/// dlog of the lift of a unit b, known at least up to t^{max_pole - 1}.
struct LiftedUnit {
  const ZqRing* ring = nullptr;
  LaurentZq dlog;
};

/// Z_q / p^M with M from the options (2n by default).
const ZqRing& pairing_ring(const FqField& field, std::size_t n, const PairingOptions& options = {});

LiftedCharacter prepare_character(const WittK& a, const PairingOptions& options = {});
/// `max_pole` is the largest ghost pole the unit will be paired against.
LiftedUnit prepare_unit(const LaurentFq& b, const ZqRing& ring, int max_pole, const PairingOptions& options = {});
LiftedUnit prepare_unit(const LaurentFq& b, const LiftedCharacter& against, const PairingOptions& options = {});

/// Tr( ghost^{-1}( Res(g_i dlog b~) ) mod p ) in Z/p^n.
PairingValue pair_prepared(const LiftedCharacter& a, const LiftedUnit& b);

/// The Artin-Schreier-Witt symbol [a, b) by the ghost-residue formula:
/// lift a and b to Z_q/p^M, take r_i = Res(w_i(a~) dlog b~), invert the
/// ghost map (every division by p^i checked), reduce mod p and take the
/// Witt trace to W_n(F_p) = Z/p^n.
PairingValue sw_pair(const WittK& a, const LaurentFq& b, const PairingOptions& options = {});

/// n = 1 reference: tr(Res(a * dlog b)) computed over F_q directly.
std::uint64_t schmid_residue_n1(const LaurentFq& a, const LaurentFq& b);

}  // namespace asw
