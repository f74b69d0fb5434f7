#pragma once

#include <optional>

#include "spinflux/killing.hpp"

namespace spinflux {

/// The 10-parameter families of invariant 3-forms (sum t_ij e_i^de_j +
/// t e_127) and 4-forms (sum f_ijk e_i^e_j^de_k + f e_3456) over the
/// preferred directions {1, 2, 7}.
std::pair<ParametricFormFamily, ParametricFormFamily> su2_families();

/// Killing system of the three-contact scenario: connection term (1/2) X,
/// invariant families, 56 equations in 20 unknowns.
KillingSystem sasakian_system(const CliffordRep& rep, const Spinor& psi, const Scalar& p,
                              const Scalar& q);

/// Solution plane of (X + (r/4)(X . w3) + p (X . *w3) + q (X ^ *w3)) psi = 0
/// in the unknowns (r, p, q), for the 3-form w3 of the given unit spinor.
AffineSolutionSpace g2_relation(const CliffordRep& rep, const Spinor& psi);

/// The admissible pair (T, F) = (((12q - 16p) f / 3 - 4/3) w3, f *w3) for
/// fixed parameters. f = 0 degenerates smoothly to (-(4/3) w3, 0).
std::pair<ExteriorForm, ExteriorForm> g2_corollary_family(const CliffordRep& rep,
                                                          const Spinor& psi, const Scalar& f,
                                                          const Scalar& p, const Scalar& q);

/// Finite-dimensional Lie algebra with exact structure constants and an
/// invariant metric, optionally with a reductive split.
struct LieAlgebraModel {
  int dim = 0;
  // bracket[i][j] = coefficients of [b_i, b_j] in the basis (0-based)
  std::vector<std::vector<std::vector<Scalar>>> bracket;
  Matrix metric;
  std::vector<int> m_indices;  // reductive complement (empty: whole algebra)
  std::vector<int> h_indices;  // isotropy subalgebra

  std::vector<Scalar> apply_bracket(int i, const std::vector<Scalar>& v) const;
  void verify_antisymmetry_and_jacobi() const;  // throws std::logic_error
  bool metric_is_biinvariant() const;
};

/// su(2) with the invariant metric -Re tr(XY)/2 (orthonormal basis).
LieAlgebraModel su2_algebra();

/// su(3) in the basis A12, ~A12, A13, ~A13, A23, ~A23, L = diag(3i,-3i,0),
/// Z = diag(i,i,-2i), with metric B = -Re tr(XY)/2 and the reductive split
/// m = span(first seven), h = R Z.
LieAlgebraModel su3_algebra();

/// Homogeneous model of the quotient by the circle diag(e^it, e^it, e^-2it):
/// orthonormal frame for the metric determined by the parameters (s, y),
/// Levi-Civita map and its spin lift, isotropy rotation data.
struct AloffWallachModel {
  Scalar s, y;
  std::vector<Matrix> nomizu;     // 7 skew 7x7 matrices over Q(s, y)
  std::vector<Matrix> spin_lift;  // their lifts, 8x8
  ExteriorForm isotropy_generator;  // ad of the circle generator as a 2-form
  // structure constants of the orthonormal frame, m- and h-parts
  std::vector<std::vector<std::vector<Scalar>>> frame_bracket_m;  // [i][j][k], 0-based
  std::vector<std::vector<Scalar>> frame_bracket_h;               // [i][j] coefficient on Z
  Matrix isotropy_action;  // ad(Z) restricted to m, in the frame
};

AloffWallachModel aw_model(const CliffordRep& rep7, const Scalar& s, const Scalar& y);

/// The 13-parameter isotropy-invariant families of 3- and 4-forms.
std::pair<ParametricFormFamily, ParametricFormFamily> aw_invariant_families();

/// Dimension of the invariant subspace of k-forms under the infinitesimal
/// isotropy rotation.
int isotropy_invariant_dimension(int k);

/// Exact Ricci matrix (in the orthonormal frame) and scalar curvature.
std::pair<Matrix, Scalar> aw_curvature(const AloffWallachModel& model);

/// Full monomial bases of 3- and 4-forms on R^8 (56 + 70 coefficients).
std::pair<ParametricFormFamily, ParametricFormFamily> dim8_families();

/// Canonical torsion T0(X,Y,Z) = -g([X,Y],Z) of a Lie group with biinvariant
/// metric, expressed over the model basis. Throws when the metric is not
/// biinvariant.
ExteriorForm lie_group_torsion(const LieAlgebraModel& model);

/// T0 of su(3) with B in the orthonormal frame u1..u8: the u8 direction
/// carries an irrational normalization, so T0 = P + sqrt(3) Q with exact
/// rational components P (no index 8) and Q (index 8); both are returned.
std::pair<ExteriorForm, ExteriorForm> su3_orthonormal_torsion_split();

}  // namespace spinflux
