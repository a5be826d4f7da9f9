#pragma once

#include <algorithm>

#include "asw/asw_class.hpp"
#include "asw/symbol.hpp"

namespace asw {

/// Non-log filtration level of the reduced representative.
unsigned conductor_fil(const ASWClass& x);

/// Least m such that [x, 1 + c t^j) = 0 for all j >= m and all c in the
/// F_p-basis of F_q.  Only j <= fil_log_level(x) + 1 is checked: the ghost
/// components have poles of order at most fil_log_level(x), so the residue
/// of w_i dlog(1 + c t^j) vanishes for larger j.
unsigned conductor_dual(const ASWClass& x, const PairingOptions& options = {});

struct ConductorRow {
  unsigned fil_log = 0;
  unsigned fil = 0;
  unsigned dual = 0;

  /// Nonzero unramified class: fil-side 1, dual 0.
  bool boundary() const { return fil >= 1 && dual == 0; }
  /// Agreement of the two sides as filtrations indexed by m >= 1.
  bool agree() const { return std::max(fil, 1u) == std::max(dual, 1u); }
};

ConductorRow conductor_row(const ASWClass& x, const PairingOptions& options = {});

}  // namespace asw
