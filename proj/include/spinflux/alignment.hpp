#pragma once

#include <string>

#include "spinflux/clifford.hpp"
#include "spinflux/geometries.hpp"
#include "spinflux/tables.hpp"

namespace spinflux {

/// The representation together with the distinguished spinor basis
/// Psi_1..Psi_8: Psi_3..Psi_6 span the su(2)-invariant subspace and are
/// chosen so that the solved three-contact coefficient table takes its
/// reference form for Psi = Psi_3; Psi_1, Psi_2, Psi_7, Psi_8 span the
/// complement. The choices made are recorded in `conventions`.
struct StandardModel {
  CliffordRep rep7;
  CliffordRep rep8;
  std::vector<Spinor> basis;  // Psi_1..Psi_8 (index 0 is Psi_1)
  bool parity_flipped = false;
  std::string conventions;

  const Spinor& psi(int k) const { return basis.at(k - 1); }
  std::vector<Spinor> delta70() const { return {psi(3), psi(4), psi(5), psi(6)}; }
  /// Basis ordered for endomorphism displays: complement first, then the
  /// invariant spinors with the distinguished Psi_3 last.
  std::vector<Spinor> endo_basis() const {
    return {psi(1), psi(2), psi(7), psi(8), psi(4), psi(5), psi(6), psi(3)};
  }
};

/// Built once per process (deterministic); throws std::logic_error when no
/// aligning basis exists.
const StandardModel& standard_model();

/// Solved three-contact family re-expressed in the reference free set.
AffineSolutionSpace sasakian_reference_view(const CliffordRep& rep, const Spinor& psi,
                                            const Scalar& p, const Scalar& q);

}  // namespace spinflux
