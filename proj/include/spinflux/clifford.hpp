#pragma once

#include <vector>

#include "spinflux/forms.hpp"
#include "spinflux/linalg.hpp"

namespace spinflux {

/// Coefficient vector of a spinor in the standard basis of its
/// representation space (length 8 for n = 7, length 16 for n = 8).
struct Spinor {
  std::vector<Scalar> c;

  bool is_zero() const;
  Spinor operator+(const Spinor& o) const;
  Spinor operator-(const Spinor& o) const;
  Spinor operator*(const Scalar& k) const;
  bool operator==(const Spinor& o) const { return c == o.c; }
};

/// Real spin representation: generator matrices E_1..E_n with
/// E_i E_j + E_j E_i = -2 delta_ij, skew-adjoint for the standard inner
/// product. For n = 8 the chirality operator splits the 16-dimensional space
/// into two 8-dimensional halves.
struct CliffordRep {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> gen;  // gen[i] is E_{i+1}
  Matrix chirality;         // only for n == 8

  const Matrix& generator(int i) const;  // 1-based
};

/// Builds the representation for n = 7 (dim 8) or n = 8 (dim 16) and checks
/// all structural invariants exactly.
CliffordRep build_rep(int n);

/// Exhaustive exact check of Clifford relations, skew-adjointness and (for
/// n = 8) the chirality grading. Throws std::logic_error on violation.
void verify_rep(const CliffordRep& rep);

Scalar inner(const Spinor& a, const Spinor& b);

Spinor act_vector(const CliffordRep& rep, int i, const Spinor& psi);

/// Endomorphism matrix of the Clifford action of a form, extending
/// e_{i1...ik} -> E_{i1}...E_{ik} linearly.
Matrix form_action(const CliffordRep& rep, const ExteriorForm& w);

Spinor act_form(const CliffordRep& rep, const ExteriorForm& w, const Spinor& psi);

/// The 3-form w(X,Y,Z) = -(X.Y.Z.psi, psi)/(psi, psi) attached to a spinor
/// (n = 7). Throws on the zero spinor.
ExteriorForm form_from_spinor(const CliffordRep& rep, const Spinor& psi);

/// Spin lift of a 2-form: e_i^e_j -> (1/2) E_i E_j, extended linearly.
Matrix spin_lift(const CliffordRep& rep, const ExteriorForm& two_form);

/// Basis of the common kernel of the lifts of the given 2-forms
/// (the full space for an empty list).
std::vector<Spinor> invariant_spinors(const CliffordRep& rep,
                                      const std::vector<ExteriorForm>& generators);

/// 2-form <-> skew matrix identification: e_a^e_b maps e_a -> e_b.
Matrix two_form_to_skew(const ExteriorForm& two_form);
ExteriorForm skew_to_two_form(const Matrix& skew, int n);

/// The su(2) triple annihilating the four distinguished spinors:
/// e34 + e56, e35 - e46, e36 + e45.
std::vector<ExteriorForm> su2_generators();

Spinor spinor_from(const std::vector<Scalar>& coeffs);

}  // namespace spinflux
