#include "asw/conductor.hpp"

namespace asw {

unsigned conductor_fil(const ASWClass& x) { return fil_level(x); }

unsigned conductor_dual(const ASWClass& x, const PairingOptions& options) {
  if (!x.reduced) throw DomainError("conductor_dual needs a reduced class");
  const FqField& field = x.field();
  const LiftedCharacter ch = prepare_character(x.representative, options);
  const LaurentFq one = LaurentFq::constant(field.one());
  const int bound = static_cast<int>(fil_log_level(x)) + 1;
  const auto basis = field.prime_field_basis();
  for (int j = bound; j >= 1; --j) {
    for (const auto& c : basis) {
      const LiftedUnit u = prepare_unit(one + LaurentFq::monomial(c, j), ch, options);
      if (!pair_prepared(ch, u).is_zero()) return static_cast<unsigned>(j) + 1;
    }
  }
  return 0;
}

ConductorRow conductor_row(const ASWClass& x, const PairingOptions& options) {
  return {fil_log_level(x), conductor_fil(x), conductor_dual(x, options)};
}

}  // namespace asw
