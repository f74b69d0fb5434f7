#include <doctest.h>

#include "spinflux/alignment.hpp"
#include "spinflux/rng.hpp"

using namespace spinflux;

TEST_CASE("invariant families of the three-contact frame have 10 + 10 coefficients") {
  auto [tfam, ffam] = su2_families();
  CHECK(tfam.size() == 10);
  CHECK(ffam.size() == 10);
  // member with t = 1, all else 0 is e127
  std::vector<Scalar> coeffs(10);
  coeffs[9] = Scalar(1);  // the "t" slot is last
  CHECK(tfam.label(9) == "t");
  CHECK(tfam.member(coeffs) == ExteriorForm::monomial(7, {1, 2, 7}));
}

TEST_CASE("every base form is annihilated by the annihilating su(2) triple") {
  auto [tfam, ffam] = su2_families();
  for (const auto& g : su2_generators()) {
    for (int j = 0; j < tfam.size(); ++j) CHECK(rotate_form(g, tfam.base_form(j)).is_zero());
    for (int j = 0; j < ffam.size(); ++j) CHECK(rotate_form(g, ffam.base_form(j)).is_zero());
  }
}

TEST_CASE("g2 relation plane contains the expected instances") {
  const StandardModel& m = standard_model();
  AffineSolutionSpace plane = g2_relation(m.rep7, m.psi(3));
  CHECK(plane.dimension() == 2);
  auto [mm, bb] = implicit_system(plane);
  auto on_plane = [&](Scalar rv, Scalar pv, Scalar qv) {
    std::vector<Scalar> x{rv, pv, qv};
    auto res = mm.apply(x);
    for (std::size_t i = 0; i < res.size(); ++i)
      if (!(res[i] == bb[i])) return false;
    return true;
  };
  CHECK(on_plane(Scalar(-4, 3), Scalar(0), Scalar(0)));   // q = p = 0 forces r = -4/3
  CHECK(on_plane(Scalar(0), Scalar(-1, 4), Scalar(0)));   // 16 (-1/4) = -4
  CHECK(!on_plane(Scalar(0), Scalar(0), Scalar(0)));
}

TEST_CASE("the admissible pair degenerates smoothly at zero flux scale") {
  const StandardModel& m = standard_model();
  SmallRng rng(5);
  Spinor psi{std::vector<Scalar>(8)};
  for (auto& c : psi.c) c = Scalar(rng.small_rational());
  ExteriorForm w3 = form_from_spinor(m.rep7, psi);
  auto [T, F] = g2_corollary_family(m.rep7, psi, Scalar(0), Scalar(2), Scalar(5));
  CHECK(T == w3 * Scalar(-4, 3));
  CHECK(F.is_zero());
  // at the coupled parameters the torsion multiple is -4/3 for any f
  auto [Tc, Fc] = g2_corollary_family(m.rep7, psi, Scalar(9), Scalar(3, 4), Scalar(1));
  CHECK(Tc == w3 * Scalar(-4, 3));
  CHECK(Fc == hodge(w3, OrientedFrame{7}) * Scalar(9));
}

TEST_CASE("su(3) structure: metric normalization and biinvariance") {
  LieAlgebraModel su3 = su3_algebra();
  CHECK(su3.dim == 8);
  CHECK(su3.metric.at(0, 0) == Scalar(1));  // B(A12, A12) = 1
  CHECK(su3.metric.at(6, 6) == Scalar(9));  // B(L, L) = 9
  CHECK(su3.metric.at(7, 7) == Scalar(3));  // B(Z, Z) = 3
  CHECK(su3.metric.at(6, 7).is_zero());
  CHECK(su3.metric_is_biinvariant());
}

TEST_CASE("canonical torsion of su(2) and of an abelian algebra") {
  ExteriorForm t0 = lie_group_torsion(su2_algebra());
  CHECK(t0 == ExteriorForm::monomial(3, {1, 2, 3}, Scalar(-2)));

  LieAlgebraModel abelian;
  abelian.dim = 2;
  abelian.bracket.assign(2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2)));
  abelian.metric = Matrix::identity(2);
  CHECK(lie_group_torsion(abelian).is_zero());
}

TEST_CASE("non-biinvariant metrics are rejected") {
  LieAlgebraModel model = su2_algebra();
  model.metric.at(0, 0) = Scalar(2);  // breaks ad-invariance
  CHECK_THROWS_AS(lie_group_torsion(model), std::invalid_argument);
}

TEST_CASE("homogeneous model: isotropy rotation and fixed spinors") {
  const StandardModel& m = standard_model();
  AloffWallachModel model = aw_model(m.rep7, Scalar(1), Scalar(2));
  // rotation speed 3 in the (3,4)- and (5,6)-planes, zero on 1, 2, 7
  ExteriorForm expected(7, 2);
  expected.add_term({3, 4}, Scalar(3));
  expected.add_term({5, 6}, Scalar(3));
  CHECK(model.isotropy_generator == expected);
  Matrix lift = spin_lift(m.rep7, model.isotropy_generator);
  for (int k = 3; k <= 6; ++k) CHECK(Spinor{lift.apply(m.psi(k).c)}.is_zero());
  // and the kernel of the lift is exactly the invariant subspace
  CHECK(invariant_spinors(m.rep7, {model.isotropy_generator}).size() == 4);
}

TEST_CASE("homogeneous model rejects nonpositive parameters") {
  const StandardModel& m = standard_model();
  CHECK_THROWS_AS(aw_model(m.rep7, Scalar(0), Scalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(aw_model(m.rep7, Scalar(1), Scalar(-2)), std::invalid_argument);
}

TEST_CASE("isotropy-invariant form families") {
  auto [tfam, ffam] = aw_invariant_families();
  CHECK(tfam.size() == 13);
  CHECK(ffam.size() == 13);
  ExteriorForm gen(7, 2);
  gen.add_term({3, 4}, Scalar(1));
  gen.add_term({5, 6}, Scalar(1));
  for (int j = 0; j < tfam.size(); ++j) CHECK(rotate_form(gen, tfam.base_form(j)).is_zero());
  for (int j = 0; j < ffam.size(); ++j) CHECK(rotate_form(gen, ffam.base_form(j)).is_zero());
  // X135 alone is not invariant, the paired combination is
  CHECK(!rotate_form(gen, ExteriorForm::monomial(7, {1, 3, 5})).is_zero());
  CHECK(rotate_form(gen, ExteriorForm::monomial(7, {1, 3, 5}) + ExteriorForm::monomial(7, {1, 4, 6}))
            .is_zero());
  // and the families exhaust the invariants
  CHECK(isotropy_invariant_dimension(3) == 13);
  CHECK(isotropy_invariant_dimension(4) == 13);
}

TEST_CASE("exact curvature at the distinguished parameters") {
  const StandardModel& m = standard_model();
  auto [ric, scal] = aw_curvature(aw_model(m.rep7, Scalar(1), Scalar(2)));
  CHECK(scal == Scalar(42));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(ric.at(i, j) == (i == j ? Scalar(6) : Scalar(0)));
}

TEST_CASE("three-contact solutions embed into the homogeneous system at (1,2)") {
  // with the sign twist (T, F) -> (-T, -F) matching the connection convention
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  Scalar p(3, 4), q(1);
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  auto plain_outcome = solve_killing(sys);
  const auto& space = space_of(plain_outcome);
  AloffWallachModel model = aw_model(m.rep7, Scalar(1), Scalar(2));
  SmallRng rng(7);
  for (int t = 0; t < 2; ++t) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < space.dimension(); ++i) coeffs.push_back(Scalar(rng.small_rational()));
    auto member = space.member(coeffs);
    std::vector<Scalar> tc, fc;
    for (int j = 0; j < tfam.size(); ++j) tc.push_back(member[space.label_index(tfam.label(j))]);
    for (int j = 0; j < ffam.size(); ++j) fc.push_back(member[space.label_index(ffam.label(j))]);
    ExteriorForm T = tfam.member(tc) * Scalar(-1);
    ExteriorForm F = ffam.member(fc) * Scalar(-1);
    bool holds = true;
    for (int i = 1; i <= 7 && holds; ++i) {
      Spinor r = Spinor{model.spin_lift[i - 1].apply(m.psi(3).c)};
      r = r + act_form(m.rep7, contract(i, T), m.psi(3)) * Scalar(1, 4);
      r = r + act_form(m.rep7, contract(i, F), m.psi(3)) * p;
      r = r + act_form(m.rep7, wedge(ExteriorForm::monomial(7, {i}), F), m.psi(3)) * q;
      holds = r.is_zero();
    }
    CHECK(holds);
  }
}

TEST_CASE("full monomial families in dimension 8") {
  auto [tfam, ffam] = dim8_families();
  CHECK(tfam.size() == 56);
  CHECK(ffam.size() == 70);
}

TEST_CASE("orthonormal-frame torsion split of su(3)") {
  auto [p, q] = su3_orthonormal_torsion_split();
  CHECK(!p.is_zero());
  CHECK(!q.is_zero());
  for (const auto& [idx, c] : p.terms())
    for (int i : idx) CHECK(i <= 7);
  for (const auto& [idx, c] : q.terms()) CHECK(idx.back() == 8);
}
