#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spinflux/clifford.hpp"
#include "spinflux/forms.hpp"
#include "spinflux/linalg.hpp"

namespace spinflux {

/// A linearly independent list of base forms with named coefficients.
class ParametricFormFamily {
 public:
  ParametricFormFamily(int degree, std::vector<std::pair<std::string, ExteriorForm>> basis);

  int degree() const { return degree_; }
  int size() const { return int(basis_.size()); }
  const std::vector<std::pair<std::string, ExteriorForm>>& basis() const { return basis_; }
  const std::string& label(int i) const { return basis_[i].first; }
  const ExteriorForm& base_form(int i) const { return basis_[i].second; }
  int ambient() const { return basis_.empty() ? 0 : basis_[0].second.ambient(); }

  ExteriorForm member(const std::vector<Scalar>& coeffs) const;
  std::vector<std::string> labels() const;

 private:
  int degree_;
  std::vector<std::pair<std::string, ExteriorForm>> basis_;
};

/// Connection term of the field equation, evaluated on frame directions.
struct KillingConn {
  Scalar lambda;  // X -> lambda * X . psi
};
struct MapConn {
  std::vector<Matrix> endo;  // X_i -> endo[i-1] . psi
};
struct ZeroConn {};
using ConnectionTerm = std::variant<KillingConn, MapConn, ZeroConn>;

/// The assembled linear system: one spinor equation per frame direction,
/// linear in the torsion and flux family coefficients.
struct KillingSystem {
  Matrix m;                 // (n * dimDelta) x (|T| + |F|)
  std::vector<Scalar> rhs;  // connection-term inhomogeneity
  std::vector<std::string> labels;
  int torsion_count = 0;  // first torsion_count columns belong to T
  int n = 0;
  int dim = 0;
  Scalar p, q;
  std::vector<std::pair<int, int>> provenance;  // (frame direction, spinor slot)
};

/// Builds the system (conn(X) + 1/4 (X . T) + p (X . F) + q (X ^ F)) psi = 0
/// over all frame directions. When a row basis is given, the dimDelta rows of
/// each frame direction are expressed in that spinor basis (identically-zero
/// equations then become zero rows).
KillingSystem assemble(const CliffordRep& rep, const ConnectionTerm& conn,
                       const ParametricFormFamily& torsion_fam,
                       const ParametricFormFamily& flux_fam, const Scalar& p, const Scalar& q,
                       const Spinor& psi, const std::vector<Spinor>* row_basis = nullptr);

/// dimDelta rows expressing (family member) . psi = 0, linear in the family
/// coefficients.
Matrix constraint_rows(const CliffordRep& rep, const ParametricFormFamily& fam, const Spinor& psi);

/// Zero-pads constraint rows into the full unknown layout of a system.
Matrix widen_constraint(const Matrix& rows, int column_offset, int total_columns);

struct SolveStats {
  int total_rows = 0;
  int zero_rows = 0;  // identically-zero equations, pruned but counted
  int rank = 0;
};

/// Solves the assembled system together with optional extra constraint
/// blocks (already widened to the full layout, homogeneous).
SolveOutcome solve_killing(const KillingSystem& sys, const std::vector<Matrix>& extra = {},
                           SolveStats* stats = nullptr);

/// Matrix of the Clifford action of a form in the given spinor basis
/// (column j holds the coordinates of w . basis[j]).
Matrix endo_matrix(const CliffordRep& rep, const ExteriorForm& w, const std::vector<Spinor>& basis);

struct ContractionReport {
  bool torsion_identity = false;   // sum e_i.(e_i . T) = 3 T
  bool flux_identity = false;      // sum e_i.(e_i . F) = 4 F
  bool wedge_identity = false;     // sum e_i.(e_i ^ F) = -(n-4) F
  Scalar flux_coefficient;         // 4p - (n-4)q
  bool contracted_equation_holds = false;
  bool all() const { return torsion_identity && flux_identity && wedge_identity && contracted_equation_holds; }
};

/// Verifies the frame-contraction identities and the contracted (Dirac)
/// equation for a solution (T, F) of the assembled system.
ContractionReport dirac_contract(const CliffordRep& rep, const ConnectionTerm& conn,
                                 const ExteriorForm& torsion, const ExteriorForm& flux,
                                 const Scalar& p, const Scalar& q, const Spinor& psi);

enum class BoundStatus { equality, strict, violated };
struct BoundReport {
  Scalar lhs;  // c^2
  Scalar rhs;  // 4n/(9(n-1)) * scal_min
  BoundStatus status;
};

/// Exact comparison of c^2 against the curvature bound.
BoundReport bound_check(const Scalar& c, int n, const Scalar& scal_min);

/// Tests T . psi = c . psi exactly; nullopt when no eigenrelation holds.
std::optional<Scalar> eigenvalue_on(const CliffordRep& rep, const ExteriorForm& w,
                                    const Spinor& psi);

}  // namespace spinflux
