#include <doctest.h>

#include "spinflux/clifford.hpp"
#include "spinflux/rng.hpp"

using namespace spinflux;

namespace {

Spinor random_spinor(SmallRng& rng, int dim) {
  Spinor s{std::vector<Scalar>(dim)};
  for (auto& x : s.c) x = Scalar(rng.small_rational());
  if (s.is_zero()) s.c[0] = Scalar(1);
  return s;
}

ExteriorForm random_two_form(SmallRng& rng, int n) {
  ExteriorForm f(n, 2);
  for (const auto& idx : increasing_tuples(n, 2)) f.add_term(idx, Scalar(rng.int_in(-3, 3)));
  return f;
}

}  // namespace

TEST_CASE("representation invariants hold for n = 7 and n = 8") {
  CliffordRep r7 = build_rep(7);
  CHECK(r7.dim == 8);
  CHECK(r7.gen.size() == 7);
  CliffordRep r8 = build_rep(8);
  CHECK(r8.dim == 16);
  CHECK(r8.gen.size() == 8);
  // verify_rep ran inside build_rep; spot-check E1*E1 = -Id
  CHECK(r7.gen[0] * r7.gen[0] == Matrix::identity(8).scaled(Scalar(-2)).scaled(Scalar(1, 2)));
}

TEST_CASE("vector action: squares, anticommutation, skew-adjointness") {
  CliffordRep rep = build_rep(7);
  SmallRng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Spinor psi = random_spinor(rng, 8);
    Spinor phi = random_spinor(rng, 8);
    CHECK(act_vector(rep, 1, act_vector(rep, 1, psi)) == psi * Scalar(-1));
    CHECK(inner(act_vector(rep, 1, phi), psi) == -(inner(phi, act_vector(rep, 1, psi))));
    Spinor a = act_vector(rep, 1, act_vector(rep, 2, psi));
    Spinor b = act_vector(rep, 2, act_vector(rep, 1, psi));
    CHECK(a == b * Scalar(-1));
  }
}

TEST_CASE("form action agrees with iterated vector action on monomials") {
  CliffordRep rep = build_rep(7);
  SmallRng rng(13);
  Spinor psi = random_spinor(rng, 8);
  ExteriorForm w = ExteriorForm::monomial(7, {1, 2});
  CHECK(act_form(rep, w, psi) == act_vector(rep, 1, act_vector(rep, 2, psi)));
}

TEST_CASE("the common kernel of the su(2) lifts is 4-dimensional") {
  CliffordRep rep = build_rep(7);
  auto basis = invariant_spinors(rep, su2_generators());
  CHECK(basis.size() == 4);
  // and every generator lift annihilates it
  for (const auto& g : su2_generators()) {
    Matrix lift = spin_lift(rep, g);
    for (const auto& psi : basis) CHECK(Spinor{lift.apply(psi.c)}.is_zero());
  }
}

TEST_CASE("empty generator list yields the full spinor space") {
  CliffordRep rep = build_rep(7);
  CHECK(invariant_spinors(rep, {}).size() == 8);
}

TEST_CASE("spin lift: lift(e12)^2 = -Id/4 and bracket compatibility") {
  CliffordRep rep = build_rep(7);
  ExteriorForm e12 = ExteriorForm::monomial(7, {1, 2});
  Matrix l = spin_lift(rep, e12);
  CHECK(l * l == Matrix::identity(8).scaled(Scalar(-1, 4)));

  SmallRng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    ExteriorForm a = random_two_form(rng, 7);
    ExteriorForm b = random_two_form(rng, 7);
    Matrix la = spin_lift(rep, a), lb = spin_lift(rep, b);
    Matrix bracket_lift = la * lb - lb * la;
    Matrix sa = two_form_to_skew(a), sb = two_form_to_skew(b);
    ExteriorForm so_bracket = skew_to_two_form(sa * sb - sb * sa, 7);
    CHECK(bracket_lift == spin_lift(rep, so_bracket));
  }
}

TEST_CASE("two-form/skew-matrix identification round-trips") {
  SmallRng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    ExteriorForm a = random_two_form(rng, 7);
    CHECK(skew_to_two_form(two_form_to_skew(a), 7) == a);
  }
}

TEST_CASE("chirality grading of the 16-dimensional representation") {
  CliffordRep rep = build_rep(8);
  // eigenspace projectors (1 +- chirality)/2 have rank 8
  Matrix pos = (Matrix::identity(16) + rep.chirality).scaled(Scalar(1, 2));
  Matrix neg = (Matrix::identity(16) - rep.chirality).scaled(Scalar(1, 2));
  CHECK(rank(pos) == 8);
  CHECK(rank(neg) == 8);
}

TEST_CASE("form_from_spinor produces an invariant eigenform") {
  CliffordRep rep = build_rep(7);
  SmallRng rng(49);
  for (int trial = 0; trial < 3; ++trial) {
    Spinor psi = random_spinor(rng, 8);
    ExteriorForm w = form_from_spinor(rep, psi);
    CHECK(w.degree() == 3);
    // w acts on its spinor with eigenvalue -7 and has norm_sq 7,
    // independently of the chosen spinor
    Spinor wpsi = act_form(rep, w, psi);
    CHECK(wpsi == psi * Scalar(-7));
    CHECK(norm_sq(w) == Scalar(7));
  }
}

TEST_CASE("zero spinor is rejected") {
  CliffordRep rep = build_rep(7);
  Spinor zero{std::vector<Scalar>(8)};
  CHECK_THROWS_AS(form_from_spinor(rep, zero), std::invalid_argument);
}

TEST_CASE("spinor 3-form is equivariant to first order") {
  // moving the spinor by a lifted 2-form rotates its 3-form: the exact
  // first-order identity is d/dt w3(psi + t lift(k) psi) = rotate_form(k, w3)
  CliffordRep rep = build_rep(7);
  SmallRng rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    Spinor psi = random_spinor(rng, 8);
    ExteriorForm kappa = random_two_form(rng, 7);
    Matrix lift = spin_lift(rep, kappa);
    Spinor moved{lift.apply(psi.c)};
    Scalar nrm = inner(psi, psi);
    ExteriorForm derivative(7, 3);
    for (const auto& idx : increasing_tuples(7, 3)) {
      Spinor a = moved, b = psi;
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        a = act_vector(rep, *it, a);
        b = act_vector(rep, *it, b);
      }
      Scalar coef = -((inner(a, psi) + inner(b, moved)) / nrm);
      if (!coef.is_zero()) derivative.add_term(idx, coef);
    }
    CHECK(derivative == rotate_form(kappa, form_from_spinor(rep, psi)));
  }
}

TEST_CASE("volume form acts as an involution up to the recorded sign") {
  CliffordRep rep = build_rep(7);
  ExteriorForm vol = ExteriorForm::monomial(7, {1, 2, 3, 4, 5, 6, 7});
  Matrix action = form_action(rep, vol);
  CHECK(action * action == Matrix::identity(8));
}
