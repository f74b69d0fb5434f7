#include <doctest.h>

#include "spinflux/alignment.hpp"
#include "spinflux/rng.hpp"

using namespace spinflux;

namespace {

bool equation_holds(const CliffordRep& rep, const ConnectionTerm& conn, const ExteriorForm& T,
                    const ExteriorForm& F, const Scalar& p, const Scalar& q, const Spinor& psi) {
  for (int i = 1; i <= rep.n; ++i) {
    Spinor r{std::vector<Scalar>(rep.dim)};
    if (const auto* k = std::get_if<KillingConn>(&conn)) r = act_vector(rep, i, psi) * k->lambda;
    if (const auto* m = std::get_if<MapConn>(&conn)) r = Spinor{m->endo.at(i - 1).apply(psi.c)};
    r = r + act_form(rep, contract(i, T), psi) * Scalar(1, 4);
    r = r + act_form(rep, contract(i, F), psi) * p;
    r = r + act_form(rep, wedge(ExteriorForm::monomial(rep.n, {i}), F), psi) * q;
    if (!r.is_zero()) return false;
  }
  return true;
}

std::pair<ExteriorForm, ExteriorForm> forms_of(const std::vector<Scalar>& member,
                                               const AffineSolutionSpace& space,
                                               const ParametricFormFamily& tfam,
                                               const ParametricFormFamily& ffam) {
  std::vector<Scalar> tc, fc;
  for (int j = 0; j < tfam.size(); ++j) tc.push_back(member[space.label_index(tfam.label(j))]);
  for (int j = 0; j < ffam.size(); ++j) fc.push_back(member[space.label_index(ffam.label(j))]);
  return {tfam.member(tc), ffam.member(fc)};
}

}  // namespace

TEST_CASE("families reject dependent base forms") {
  ExteriorForm a = ExteriorForm::monomial(7, {1, 2, 3});
  ExteriorForm b = a * Scalar(2);
  CHECK_THROWS_AS(ParametricFormFamily(3, {{"a", a}, {"b", b}}), std::invalid_argument);
}

TEST_CASE("three-contact system has 56 rows and 20 unknowns") {
  const StandardModel& m = standard_model();
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), Scalar(1), Scalar(1));
  CHECK(sys.m.rows() == 56);
  CHECK(sys.labels.size() == 20);
  CHECK(sys.torsion_count == 10);
}

TEST_CASE("assemble rejects the zero spinor") {
  const StandardModel& m = standard_model();
  Spinor zero{std::vector<Scalar>(8)};
  CHECK_THROWS_AS(sasakian_system(m.rep7, zero, Scalar(1), Scalar(1)), std::invalid_argument);
}

TEST_CASE("resubstitution: random members solve the assembled equation") {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  Scalar p(1), q(1);
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  auto outcome = solve_killing(sys);
  REQUIRE(!is_infeasible(outcome));
  const auto& space = space_of(outcome);
  REQUIRE(space.dimension() == 7);
  SmallRng rng(2);
  for (int t = 0; t < 5; ++t) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < 7; ++i) coeffs.push_back(Scalar(rng.small_rational()));
    auto [T, F] = forms_of(space.member(coeffs), space, tfam, ffam);
    CHECK(equation_holds(m.rep7, KillingConn{Scalar(1, 2)}, T, F, p, q, m.psi(3)));
  }
}

TEST_CASE("flux constraint reduces to the gamma hyperplane on the solution space") {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  Scalar p(2), q(3);
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  const int total = int(sys.labels.size());
  Matrix fc = widen_constraint(constraint_rows(m.rep7, ffam, m.psi(3)), tfam.size(), total);
  auto plain = solve_killing(sys);
  auto constrained = solve_killing(sys, {fc});
  REQUIRE(!is_infeasible(constrained));
  CHECK(space_of(constrained).dimension() == 6);

  // gamma = f - 2 f127 + 2 f172 + 2 f271 = 0 cuts the same subspace
  const auto& space = space_of(plain);
  Matrix row(1, total);
  row.at(0, space.label_index("f")) = Scalar(1);
  row.at(0, space.label_index("f127")) = Scalar(-2);
  row.at(0, space.label_index("f172")) = Scalar(2);
  row.at(0, space.label_index("f271")) = Scalar(2);
  auto cut = solve_affine(row, {Scalar(0)}, space.labels);
  auto expected = intersect(space, space_of(cut));
  REQUIRE(!is_infeasible(expected));
  CHECK(same_affine_space(space_of(constrained), space_of(expected)));
}

TEST_CASE("torsion constraint carries the -7 + (8p-6q) gamma relation") {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  Scalar p = Scalar::var(Var::p), q = Scalar::var(Var::q);
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  const int total = int(sys.labels.size());
  Matrix tc = widen_constraint(constraint_rows(m.rep7, tfam, m.psi(3)), 0, total);
  auto constrained = solve_killing(sys, {tc});
  REQUIRE(!is_infeasible(constrained));
  CHECK(space_of(constrained).dimension() == 6);

  auto plain_outcome = solve_killing(sys);
  const auto& space = space_of(plain_outcome);
  Matrix row(1, total);
  Scalar factor = Scalar(8) * p - Scalar(6) * q;
  row.at(0, space.label_index("f")) = factor;
  row.at(0, space.label_index("f127")) = -factor * Scalar(2);
  row.at(0, space.label_index("f172")) = factor * Scalar(2);
  row.at(0, space.label_index("f271")) = factor * Scalar(2);
  auto cut = solve_affine(row, {Scalar(7)}, space.labels);
  auto expected = intersect(space, space_of(cut));
  REQUIRE(!is_infeasible(expected));
  CHECK(same_affine_space(space_of(constrained), space_of(expected)));
}

TEST_CASE("solution dimension is invariant under the choice of invariant spinor") {
  const StandardModel& m = standard_model();
  std::vector<Spinor> spinors{m.psi(4), m.psi(5),
                              m.psi(3) * Scalar(3, 5) + m.psi(6) * Scalar(4, 5)};
  for (const auto& psi : spinors) {
    KillingSystem sys = sasakian_system(m.rep7, psi, Scalar(1), Scalar(2));
    auto outcome = solve_killing(sys);
    REQUIRE(!is_infeasible(outcome));
    CHECK(space_of(outcome).dimension() == 7);
  }
}

TEST_CASE("endomorphism matrix of the spinor 3-form has the distinguished eigenvalue last") {
  const StandardModel& m = standard_model();
  Spinor unit = m.psi(3) * Scalar(1, 2);
  ExteriorForm w3 = form_from_spinor(m.rep7, unit);
  Matrix endo = endo_matrix(m.rep7, w3, m.endo_basis());
  CHECK(endo.at(7, 7) == Scalar(-7));
  for (int i = 0; i < 7; ++i) CHECK(endo.at(i, 7).is_zero());
}

TEST_CASE("endo_matrix rejects a degenerate basis") {
  const StandardModel& m = standard_model();
  std::vector<Spinor> bad(8, m.psi(3));
  CHECK_THROWS_AS(endo_matrix(m.rep7, de1(), bad), std::invalid_argument);
}

TEST_CASE("dirac contraction report for a solved member") {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  Scalar p(3, 4), q(1);
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  auto outcome = solve_killing(sys);
  const auto& space = space_of(outcome);
  SmallRng rng(4);
  std::vector<Scalar> coeffs;
  for (int i = 0; i < space.dimension(); ++i) coeffs.push_back(Scalar(rng.small_rational()));
  auto [T, F] = forms_of(space.member(coeffs), space, tfam, ffam);
  ContractionReport report =
      dirac_contract(m.rep7, KillingConn{Scalar(1, 2)}, T, F, p, q, m.psi(3));
  CHECK(report.torsion_identity);
  CHECK(report.flux_identity);
  CHECK(report.wedge_identity);
  CHECK(report.contracted_equation_holds);
  CHECK(report.flux_coefficient.is_zero());  // coupled parameters
  CHECK(report.all());
}

TEST_CASE("the contracted-equation flux coefficient is nonzero away from the coupling") {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  Scalar p(1), q(1);
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  auto plain_outcome = solve_killing(sys);
  const auto& space = space_of(plain_outcome);
  auto [T, F] = forms_of(space.particular, space, tfam, ffam);
  ContractionReport report =
      dirac_contract(m.rep7, KillingConn{Scalar(1, 2)}, T, F, p, q, m.psi(3));
  CHECK(report.flux_coefficient == Scalar(1));
  CHECK(report.contracted_equation_holds);
}

TEST_CASE("bound_check statuses") {
  BoundReport eq = bound_check(Scalar(14, 3), 7, Scalar(42));
  CHECK(eq.status == BoundStatus::equality);
  CHECK(eq.lhs == Scalar(196, 9));
  CHECK(eq.rhs == Scalar(196, 9));

  BoundReport trivial = bound_check(Scalar(0), 7, Scalar(0));
  CHECK(trivial.status == BoundStatus::equality);

  BoundReport strict = bound_check(Scalar(10), 7, Scalar(42));
  CHECK(strict.status == BoundStatus::strict);

  BoundReport violated = bound_check(Scalar(1), 7, Scalar(42));
  CHECK(violated.status == BoundStatus::violated);
}

TEST_CASE("eigenvalue_on distinguishes eigenrelations from general actions") {
  const StandardModel& m = standard_model();
  Spinor psi = m.psi(3);
  ExteriorForm w3 = form_from_spinor(m.rep7, psi * Scalar(1, 2));
  auto ev = eigenvalue_on(m.rep7, w3, psi);
  REQUIRE(ev.has_value());
  CHECK(*ev == Scalar(-7));
  // a single monomial 3-form does not act diagonally on the invariant spinor
  auto none = eigenvalue_on(m.rep7, ExteriorForm::monomial(7, {1, 2, 3}), psi);
  CHECK(!none.has_value());
}
