#pragma once

#include <map>
#include <optional>
#include <string>

#include "spinflux/linalg.hpp"

namespace spinflux {

/// Reference solution table: every determined coefficient as an affine-linear
/// expression in the free coefficients.
struct CoefficientTable {
  std::vector<std::string> free_labels;
  struct Row {
    Scalar constant;
    std::map<std::string, Scalar> coeffs;
  };
  std::map<std::string, Row> rows;
};

/// The solved three-contact-frame family, symbolic (p, q), in the free set
/// {f127, f172, f177, f271, f272, f277, f}.
const CoefficientTable& sasakian_table();

/// Its specialization at the coupled parameters (p, q) = (3/4, 1).
const CoefficientTable& sasakian_coupled_table();

/// The homogeneous-quotient family, symbolic (s, y, p, q), free coefficients
/// {alpha4, beta4, gamma4, eps4, xi4, nu4, eta4, omega4, pi4, rho4}.
const CoefficientTable& aw_table();

/// First mismatching entry between a solution space (already re-expressed in
/// the table's free labels) and the table; nullopt when everything matches.
std::optional<std::string> table_mismatch(const AffineSolutionSpace& space,
                                          const CoefficientTable& table);

/// Specializes a table's scalars (used to cross-check the symbolic table
/// against its coupled form).
CoefficientTable specialize_table(const CoefficientTable& table,
                                  const std::map<Var, Rational>& assignment);

bool tables_equal(const CoefficientTable& a, const CoefficientTable& b);

}  // namespace spinflux
