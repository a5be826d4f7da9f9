#pragma once

#include <cstdint>
#include <vector>

#include "asw/conductor.hpp"
#include "asw/symbol.hpp"

namespace asw {

/// Row-major matrix of pairing values (characters x units).
struct PairingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> values;

  std::uint64_t at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;
};

// Serial references and OpenMP versions of the two hot loops.  The
// parallel versions give identical results for any thread count; jobs <= 0
// uses the OpenMP default.

PairingMatrix pairing_matrix_serial(const std::vector<LiftedCharacter>& chars, const std::vector<LiftedUnit>& units);
PairingMatrix pairing_matrix_parallel(const std::vector<LiftedCharacter>& chars, const std::vector<LiftedUnit>& units,
                                      int jobs = 0);

std::vector<ConductorRow> conductor_table_serial(const std::vector<WittK>& reps, const PairingOptions& options = {});
std::vector<ConductorRow> conductor_table_parallel(const std::vector<WittK>& reps, int jobs = 0,
                                                   const PairingOptions& options = {});

/// Units lifted against the largest ghost pole among `chars`.
std::vector<LiftedUnit> prepare_units(const std::vector<LaurentFq>& units, const std::vector<LiftedCharacter>& chars,
                                      const PairingOptions& options = {});
std::vector<LiftedCharacter> prepare_characters(const std::vector<WittK>& chars, const PairingOptions& options = {});

}  // namespace asw
