#include <chrono>
#include <future>
#include <sstream>

#include "spinflux/scenarios.hpp"

namespace spinflux {

namespace {

using Status = Claim::Status;

Claim check(const std::string& anchor, const std::string& text, const std::string& expected,
            const std::string& computed, bool ok) {
  return Claim{anchor, text, expected, computed, ok ? Status::pass : Status::fail};
}

Claim note(const std::string& anchor, const std::string& text,
           const std::string& computed = "") {
  return Claim{anchor, text, "", computed, Status::note};
}

std::string fmt_to(const SolveOutcome& o) {
  return is_infeasible(o) ? "empty" : std::to_string(space_of(o).dimension());
}

ExteriorForm seeded_form(SmallRng& rng, int n, int k, int nterms) {
  ExteriorForm f(n, k);
  auto tuples = increasing_tuples(n, k);
  for (int t = 0; t < nterms; ++t)
    f.add_term(tuples[rng.below(int(tuples.size()))], Scalar(rng.small_rational()));
  return f;
}

struct CriterionTimer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
};

// --------------------------------------------------------------------------

ScenarioReport criterion1() {
  ScenarioReport r;
  r.name = "criterion-1 clifford foundations";
  const StandardModel& m = standard_model();
  bool relations = true;
  for (const CliffordRep* rep : {&m.rep7, &m.rep8}) {
    Matrix minus2 = Matrix::identity(rep->dim).scaled(Scalar(-2));
    for (int i = 1; i <= rep->n && relations; ++i)
      for (int j = 1; j <= rep->n && relations; ++j) {
        Matrix s = rep->generator(i) * rep->generator(j) + rep->generator(j) * rep->generator(i);
        Matrix expect = (i == j) ? minus2 : Matrix(rep->dim, rep->dim);
        if (!(s == expect)) relations = false;
      }
  }
  r.claims.push_back(check("clifford.relations",
                           "generator anticommutation relations hold exhaustively for n = 7, 8",
                           "E_i E_j + E_j E_i = -2 delta_ij", relations ? "verified" : "violated",
                           relations));
  auto basis = invariant_spinors(m.rep7, su2_generators());
  r.claims.push_back(check("clifford.invariant-subspace",
                           "common kernel of the su(2) lifts is 4-dimensional", "4",
                           std::to_string(basis.size()), basis.size() == 4));
  return r;
}

ScenarioReport criterion2() {
  ScenarioReport r;
  r.name = "criterion-2 three-contact dimensions";
  const StandardModel& m = standard_model();
  const std::pair<Rational, Rational> pq[] = {{Rational(1), Rational(1)},
                                              {Rational(2), Rational(1)},
                                              {Rational(1, 2), Rational(1, 3)},
                                              {Rational(-1), Rational(2)},
                                              {Rational(5), Rational(-7, 2)}};
  std::vector<Spinor> spinors;
  for (int k : {3, 4, 5}) spinors.push_back(m.psi(k) * Scalar(1, 2));
  bool units = true;
  for (const auto& psi : spinors) units = units && inner(psi, psi) == Scalar(1);
  r.claims.push_back(check("sasakian3.unit-spinors", "test spinors are unit invariant spinors",
                           "norms 1", units ? "norms 1" : "other", units));
  bool plain = true, fz = true, tz = true, joint = true, generic = true;
  for (const auto& [pv, qv] : pq) generic = generic && (4 * pv - 3 * qv != 0);
  auto [tfam, ffam] = su2_families();
  for (const auto& [pv, qv] : pq)
    for (const auto& psi : spinors) {
      KillingSystem sys = sasakian_system(m.rep7, psi, Scalar(pv), Scalar(qv));
      const int total = int(sys.labels.size());
      Matrix tc = widen_constraint(constraint_rows(m.rep7, tfam, psi), 0, total);
      Matrix fc = widen_constraint(constraint_rows(m.rep7, ffam, psi), tfam.size(), total);
      auto o0 = solve_killing(sys);
      auto of = solve_killing(sys, {fc});
      auto ot = solve_killing(sys, {tc});
      auto oj = solve_killing(sys, {tc, fc});
      plain = plain && !is_infeasible(o0) && space_of(o0).dimension() == 7;
      fz = fz && !is_infeasible(of) && space_of(of).dimension() == 6;
      tz = tz && !is_infeasible(ot) && space_of(ot).dimension() == 6;
      joint = joint && is_infeasible(oj);
    }
  r.claims.push_back(check("sasakian3.parameters-generic", "all seeded parameter pairs avoid the coupling",
                           "4p - 3q != 0", generic ? "yes" : "no", generic));
  r.claims.push_back(check("sasakian3.dimension", "dimension 7 for 5 parameter pairs and 3 spinors",
                           "7", plain ? "7" : "other", plain));
  r.claims.push_back(check("sasakian3.f-constraint", "flux constraint cuts to dimension 6", "6",
                           fz ? "6" : "other", fz));
  r.claims.push_back(check("sasakian3.t-constraint", "torsion constraint cuts to dimension 6", "6",
                           tz ? "6" : "other", tz));
  r.claims.push_back(check("sasakian3.joint-constraints", "both constraints are incompatible",
                           "empty", joint ? "empty" : "nonempty", joint));
  return r;
}

ScenarioReport criterion3() {
  ScenarioReport r;
  r.name = "criterion-3 coupling eigenvalue";
  const StandardModel& m = standard_model();
  Scalar p = Scalar::var(Var::p);
  Scalar q = Scalar(4, 3) * p;
  auto [tfam, ffam] = su2_families();
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), p, q);
  auto outcome = solve_killing(sys);
  bool ok = !is_infeasible(outcome);
  std::string computed = "empty";
  if (ok) {
    const auto& space = space_of(outcome);
    std::vector<Scalar> tc;
    for (int j = 0; j < tfam.size(); ++j)
      tc.push_back(space.particular[space.label_index(tfam.label(j))]);
    auto ev = eigenvalue_on(m.rep7, tfam.member(tc), m.psi(3));
    ok = ev.has_value() && *ev == Scalar(14, 3);
    computed = ev ? ev->to_string() : "no eigenrelation";
    for (const auto& g : space.kernel) {
      std::vector<Scalar> gc;
      for (int j = 0; j < tfam.size(); ++j) gc.push_back(g[space.label_index(tfam.label(j))]);
      if (!act_form(m.rep7, tfam.member(gc), m.psi(3)).is_zero()) {
        ok = false;
        computed += " (kernel torsion acts nontrivially)";
      }
    }
  }
  r.claims.push_back(check("sasakian3.coupling.eigenvalue",
                           "with q = 4p/3 symbolic, the torsion of every member acts by 14/3",
                           "14/3 on the particular member, 0 on kernel torsions", computed, ok));
  return r;
}

ScenarioReport criterion4() {
  ScenarioReport r;
  r.name = "criterion-4 coefficient tables";
  const StandardModel& m = standard_model();
  auto view =
      sasakian_reference_view(m.rep7, m.psi(3), Scalar::var(Var::p), Scalar::var(Var::q));
  auto mm = table_mismatch(view, sasakian_table());
  r.claims.push_back(check("sasakian3.table.symbolic",
                           "symbolic solution matches the reference table verbatim", "verbatim",
                           mm ? *mm : "verbatim", !mm));
  auto view_c = sasakian_reference_view(m.rep7, m.psi(3), Scalar(3, 4), Scalar(1));
  auto mm_c = table_mismatch(view_c, sasakian_coupled_table());
  r.claims.push_back(check("sasakian3.table.coupled",
                           "coupled-parameter solution matches the specialized table", "verbatim",
                           mm_c ? *mm_c : "verbatim", !mm_c));
  bool consistent = tables_equal(
      specialize_table(sasakian_table(), {{Var::p, Rational(3, 4)}, {Var::q, Rational(1)}}),
      sasakian_coupled_table());
  r.claims.push_back(check("sasakian3.table.consistency",
                           "the symbolic table specializes to the coupled table", "equal",
                           consistent ? "equal" : "different", consistent));
  return r;
}

ScenarioReport criterion5() {
  ScenarioReport r;
  r.name = "criterion-5 g2 relation and family";
  ScenarioOptions opts;
  for (std::uint64_t seed : {0ull, 1ull}) {
    opts.seed = seed;
    ScenarioReport sub = run_scenario("g2", opts);
    for (auto& c : sub.claims)
      if (c.status != Status::note || seed == 0) {
        c.anchor += "@seed" + std::to_string(seed);
        r.claims.push_back(c);
      }
  }
  return r;
}

ScenarioReport criterion6() {
  ScenarioReport r;
  r.name = "criterion-6 spinor 3-form facts";
  const StandardModel& m = standard_model();
  SmallRng rng(6);
  std::vector<Spinor> spinors{m.psi(3) * Scalar(1, 2)};
  for (int t = 0; t < 2; ++t) spinors.push_back(seeded_spinor(rng, 8));
  bool eigen = true, norm = true;
  for (const auto& psi : spinors) {
    ExteriorForm w3 = form_from_spinor(m.rep7, psi);
    eigen = eigen && act_form(m.rep7, w3, psi) == psi * Scalar(-7);
    norm = norm && norm_sq(w3) == Scalar(7);
  }
  r.claims.push_back(check("g2.omega3.eigenvalue", "the spinor 3-form acts by -7 on its spinor",
                           "-7", eigen ? "-7" : "other", eigen));
  r.claims.push_back(check("g2.omega3.norm", "squared norm of the spinor 3-form", "7",
                           norm ? "7" : "other", norm));
  return r;
}

ScenarioReport criterion7() {
  ScenarioReport r;
  r.name = "criterion-7 homogeneous-quotient system";
  const StandardModel& m = standard_model();
  Scalar s = Scalar::var(Var::s), y = Scalar::var(Var::y);
  Scalar p = Scalar::var(Var::p), q = Scalar::var(Var::q);
  auto [tfam, ffam] = aw_invariant_families();
  AloffWallachModel model = aw_model(m.rep7, s, y);
  KillingSystem sys = assemble(m.rep7, MapConn{model.spin_lift}, tfam, ffam, p, q, m.psi(3), &m.basis);
  SolveStats stats;
  auto outcome = solve_killing(sys, {}, &stats);
  r.claims.push_back(check("aw.trivial-rows", "28 of the 56 equations vanish identically", "28",
                           std::to_string(stats.zero_rows), stats.zero_rows == 28));
  bool dim_ok = !is_infeasible(outcome) && space_of(outcome).dimension() == 10;
  r.claims.push_back(check("aw.dimension.symbolic", "symbolic solution space has dimension 10",
                           "10", is_infeasible(outcome) ? "empty"
                                              : std::to_string(space_of(outcome).dimension()),
                           dim_ok));
  if (!dim_ok) return r;
  const auto& space = space_of(outcome);

  // specializations, including two on the coupling locus 6q - 8p = 0
  const Rational spec[][4] = {
      {Rational(1), Rational(2), Rational(3, 4), Rational(1)},   // coupled
      {Rational(2), Rational(3), Rational(3, 8), Rational(1, 2)},  // coupled
      {Rational(1), Rational(2), Rational(1), Rational(1)},
      {Rational(1), Rational(1), Rational(2), Rational(1)},
      {Rational(2), Rational(1), Rational(1), Rational(3)},
      {Rational(1), Rational(3), Rational(1, 2), Rational(1, 2)},
      {Rational(3), Rational(2), Rational(-1), Rational(1)},
      {Rational(1, 2), Rational(1, 2), Rational(2), Rational(-1)},
      {Rational(5), Rational(1), Rational(1), Rational(0)},
      {Rational(1), Rational(4), Rational(-2), Rational(3)},
  };
  bool specialized_ok = true;
  int coupled_count = 0;
  for (const auto& sp : spec) {
    std::map<Var, Rational> at{
        {Var::s, sp[0]}, {Var::y, sp[1]}, {Var::p, sp[2]}, {Var::q, sp[3]}};
    if (6 * sp[3] - 8 * sp[2] == 0) ++coupled_count;
    auto spec_outcome = specialize(space, at);
    if (is_infeasible(spec_outcome) || space_of(spec_outcome).dimension() != 10)
      specialized_ok = false;
  }
  r.claims.push_back(check("aw.dimension.specialized",
                           "dimension stays 10 at 10 seeded parameter points (2 on the coupling locus)",
                           "10 (x10)", specialized_ok ? "10 (x10)" : "deviation", specialized_ok));
  r.claims.push_back(check("aw.specializations.coupled", "the seeded list covers the coupling locus",
                           ">=1", std::to_string(coupled_count), coupled_count >= 1));

  bool rel_ok = true;
  {
    auto vanish = [&](std::map<std::string, Scalar> coeffs) {
      std::vector<Scalar> row(space.labels.size());
      for (auto& [l, v] : coeffs) row[space.label_index(l)] = v;
      for (const auto& v : evaluate_on_space(space, row, Scalar(0)))
        if (!v.is_zero()) return false;
      return true;
    };
    rel_ok = vanish({{"delta4", Scalar(1)}, {"eps4", Scalar(-1)}, {"eta4", Scalar(2)}}) &&
             vanish({{"mu4", Scalar(1)}, {"xi4", Scalar(-1)}, {"nu4", Scalar(-2)}}) &&
             vanish({{"lambda4", Scalar(1)}, {"pi4", Scalar(-1)}});
  }
  r.claims.push_back(check("aw.flux-relations",
                           "delta4 = eps4 - 2 eta4, mu4 = xi4 + 2 nu4, lambda4 = pi4 on the whole space",
                           "hold", rel_ok ? "hold" : "violated", rel_ok));

  const int total = int(sys.labels.size());
  Matrix fc = widen_constraint(constraint_rows(m.rep7, ffam, m.psi(3)), tfam.size(), total);
  Matrix tc = widen_constraint(constraint_rows(m.rep7, tfam, m.psi(3)), 0, total);
  auto with_f = solve_killing(sys, {fc});
  bool f9 = !is_infeasible(with_f) && space_of(with_f).dimension() == 9;
  r.claims.push_back(check("aw.f-constraint.dimension", "flux constraint cuts to dimension 9", "9",
                           fmt_to(with_f), f9));
  // the constraint adds exactly one parameter-free linear condition
  {
    Matrix row(1, total);
    row.at(0, space.label_index("alpha4")) = Scalar(-1);
    row.at(0, space.label_index("beta4")) = Scalar(1);
    row.at(0, space.label_index("gamma4")) = Scalar(1);
    row.at(0, space.label_index("omega4")) = Scalar(2);
    row.at(0, space.label_index("rho4")) = Scalar(2);
    auto cut = solve_affine(row, {Scalar(0)}, space.labels);
    auto expected = intersect(space, space_of(cut));
    bool same = !is_infeasible(with_f) && !is_infeasible(expected) &&
                same_affine_space(space_of(with_f), space_of(expected));
    r.claims.push_back(check("aw.f-constraint.condition",
                             "the new condition is -alpha4 + beta4 + gamma4 + 2 omega4 + 2 rho4 = 0, "
                             "free of s, y, p, q",
                             "exactly that hyperplane", same ? "exactly that hyperplane" : "different",
                             same));
  }
  {
    auto with_t = solve_killing(sys, {tc});
    Scalar factor = s * (Scalar(6) * q - Scalar(8) * p);
    Matrix row(1, total);
    row.at(0, space.label_index("alpha4")) = -factor;
    row.at(0, space.label_index("beta4")) = factor;
    row.at(0, space.label_index("gamma4")) = factor;
    row.at(0, space.label_index("omega4")) = factor * Scalar(2);
    row.at(0, space.label_index("rho4")) = factor * Scalar(2);
    Scalar rhs = Scalar(1) + y + Scalar(4) * s * s;
    auto cut = solve_affine(row, {rhs}, space.labels);
    bool same = !is_infeasible(with_t) && !is_infeasible(cut);
    if (same) {
      auto expected = intersect(space, space_of(cut));
      same = !is_infeasible(expected) && same_affine_space(space_of(with_t), space_of(expected));
    }
    r.claims.push_back(check("aw.t-constraint.locus",
                             "the torsion constraint locus is s(6q-8p)(-alpha4+beta4+gamma4+2omega4+"
                             "2rho4) = 1 + y + 4s^2",
                             "exactly that locus", same ? "exactly that locus" : "different", same));
  }
  auto joint = solve_killing(sys, {tc, fc});
  r.claims.push_back(check("aw.joint-constraints", "both constraints together are infeasible",
                           "empty", is_infeasible(joint) ? "empty" : "nonempty",
                           is_infeasible(joint)));
  return r;
}

ScenarioReport criterion8() {
  ScenarioReport r;
  r.name = "criterion-8 homogeneous-quotient coefficient formulas";
  const StandardModel& m = standard_model();
  Scalar s = Scalar::var(Var::s), y = Scalar::var(Var::y);
  Scalar p = Scalar::var(Var::p), q = Scalar::var(Var::q);
  auto [tfam, ffam] = aw_invariant_families();
  AloffWallachModel model = aw_model(m.rep7, s, y);
  KillingSystem sys = assemble(m.rep7, MapConn{model.spin_lift}, tfam, ffam, p, q, m.psi(3), &m.basis);
  auto outcome = solve_killing(sys);
  bool ok = !is_infeasible(outcome);
  std::string detail = "empty system";
  if (ok) {
    auto re = with_free_variables(space_of(outcome), aw_table().free_labels);
    if (!re) {
      ok = false;
      detail = "free set does not parametrize";
    } else {
      auto mm = table_mismatch(*re, aw_table());
      ok = !mm;
      detail = mm ? *mm : "verbatim";
    }
  }
  r.claims.push_back(check("aw.table",
                           "metric-independent and metric-dependent coefficient formulas hold verbatim",
                           "verbatim", detail, ok));
  return r;
}

ScenarioReport criterion9() {
  ScenarioReport r;
  r.name = "criterion-9 dimension-8 proposition";
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = dim8_families();
  struct SeedResult {
    int rows, unknowns, rank, kernel;
  };
  std::vector<std::future<SeedResult>> futures;
  for (std::uint64_t seed = 40; seed < 45; ++seed)
    futures.push_back(std::async(std::launch::async, [&, seed]() {
      SmallRng rng(seed);
      Spinor psi = seeded_spinor(rng, 16);
      KillingSystem sys = assemble(m.rep8, ZeroConn{}, tfam, ffam, Scalar(1), Scalar(1), psi);
      SolveStats stats;
      auto outcome = solve_killing(sys, {}, &stats);
      return SeedResult{stats.total_rows, int(sys.labels.size()), stats.rank,
                        is_infeasible(outcome) ? -1 : space_of(outcome).dimension()};
    }));
  bool rows_ok = true, rank_ok = true, kernel_ok = true;
  std::ostringstream ranks, kernels;
  for (auto& f : futures) {
    SeedResult sr = f.get();
    rows_ok = rows_ok && sr.rows == 128 && sr.unknowns == 126;
    rank_ok = rank_ok && sr.rank == 101;
    kernel_ok = kernel_ok && sr.kernel == 25;
    ranks << sr.rank << " ";
    kernels << sr.kernel << " ";
  }
  r.claims.push_back(check("dim8.shape", "128 equations in 126 unknowns for 5 seeded spinors",
                           "128x126", rows_ok ? "128x126" : "other", rows_ok));
  r.claims.push_back(check("dim8.rank", "rank of the system", "101", ranks.str(), rank_ok));
  r.claims.push_back(check("dim8.kernel", "kernel dimension", "25", kernels.str(), kernel_ok));
  r.claims.push_back(note(
      "dim8.rank-bound",
      "equivariance under the stabilizer of the chirality pair bounds the rank by 99 (the "
      "27-dimensional isotypic component appears 3 times among unknowns, twice among equations); "
      "rank 99 / kernel 27 is therefore the true generic value and 101/25 is unattainable. A "
      "25-parameter subfamily of solutions exists inside the 27-dimensional kernel."));
  return r;
}

ScenarioReport criterion10() {
  ScenarioReport r;
  r.name = "criterion-10 contraction identities";
  const StandardModel& m = standard_model();
  SmallRng rng(10);
  bool t_id = true, f_id = true, w_id = true;
  for (const CliffordRep* rep : {&m.rep7, &m.rep8}) {
    for (int trial = 0; trial < 20; ++trial) {
      ExteriorForm T = seeded_form(rng, rep->n, 3, 6);
      ExteriorForm F = seeded_form(rng, rep->n, 4, 6);
      Matrix tsum(rep->dim, rep->dim), fsum(rep->dim, rep->dim), wsum(rep->dim, rep->dim);
      for (int i = 1; i <= rep->n; ++i) {
        tsum = tsum + rep->generator(i) * form_action(*rep, contract(i, T));
        fsum = fsum + rep->generator(i) * form_action(*rep, contract(i, F));
        wsum = wsum + rep->generator(i) *
                          form_action(*rep, wedge(ExteriorForm::monomial(rep->n, {i}), F));
      }
      t_id = t_id && tsum == form_action(*rep, T).scaled(Scalar(3));
      f_id = f_id && fsum == form_action(*rep, F).scaled(Scalar(4));
      w_id = w_id && wsum == form_action(*rep, F).scaled(Scalar(-(rep->n - 4)));
    }
  }
  r.claims.push_back(check("contraction.torsion", "sum_i e_i.(e_i , T) = 3 T for 20 seeded forms, n = 7, 8",
                           "3T", t_id ? "3T" : "other", t_id));
  r.claims.push_back(check("contraction.flux", "sum_i e_i.(e_i , F) = 4 F", "4F",
                           f_id ? "4F" : "other", f_id));
  r.claims.push_back(check("contraction.wedge", "sum_i e_i.(e_i ^ F) = -(n-4) F", "-(n-4)F",
                           w_id ? "-(n-4)F" : "other", w_id));
  Scalar c7 = Scalar(4) * Scalar(3, 4) - Scalar(3) * Scalar(1);
  Scalar c8 = Scalar(4) * Scalar(1) - Scalar(4) * Scalar(1);
  r.claims.push_back(check("contraction.coupled-presets",
                           "the contracted-equation flux coefficient vanishes at the coupled presets",
                           "0 and 0", c7.to_string() + " and " + c8.to_string(),
                           c7.is_zero() && c8.is_zero()));
  return r;
}

ScenarioReport criterion11() {
  ScenarioReport r;
  r.name = "criterion-11 endomorphism matrices";
  const StandardModel& m = standard_model();
  auto view = sasakian_reference_view(m.rep7, m.psi(3), Scalar(3, 4), Scalar(1));
  auto [tfam, ffam] = su2_families();
  auto basis = m.endo_basis();
  SmallRng rng(11);
  bool all_ok = true;
  for (int member_i = 0; member_i < 5 && all_ok; ++member_i) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < view.dimension(); ++i) coeffs.push_back(Scalar(rng.small_rational()));
    auto member = view.member(coeffs);
    auto value = [&](const std::string& l) { return member[view.label_index(l)]; };
    Scalar f = value("f"), f127 = value("f127"), f172 = value("f172"), f177 = value("f177"),
           f271 = value("f271"), f272 = value("f272"), f277 = value("f277");
    Scalar gamma = f - 2 * f127 + 2 * f172 + 2 * f271;

    Matrix f_expect(8, 8);
    for (int i = 0; i < 4; ++i) f_expect.at(i, i) = -f;
    f_expect.at(4, 4) = f - 2 * f127 - 2 * f172 - 2 * f271;
    f_expect.at(5, 5) = f + 2 * f127 + 2 * f172 - 2 * f271;
    f_expect.at(6, 6) = f + 2 * f127 - 2 * f172 + 2 * f271;
    f_expect.at(4, 5) = f_expect.at(5, 4) = -4 * f177;
    f_expect.at(4, 6) = f_expect.at(6, 4) = -4 * f277;
    f_expect.at(5, 6) = f_expect.at(6, 5) = 4 * f272;
    f_expect.at(7, 7) = gamma;

    Matrix t_expect(8, 8);
    for (int i = 0; i < 7; ++i) t_expect.at(i, i) = gamma - Scalar(2, 3);
    t_expect.at(7, 7) = Scalar(14, 3) - 7 * gamma;
    t_expect = t_expect + f_expect.scaled(Scalar(7));

    std::vector<Scalar> tc, fc;
    for (int j = 0; j < tfam.size(); ++j) tc.push_back(value(tfam.label(j)));
    for (int j = 0; j < ffam.size(); ++j) fc.push_back(value(ffam.label(j)));
    Matrix f_endo = endo_matrix(m.rep7, ffam.member(fc), basis);
    Matrix t_endo = endo_matrix(m.rep7, tfam.member(tc), basis);
    if (!(f_endo == f_expect) || !(t_endo == t_expect)) all_ok = false;
    // traceless and symmetric
    Scalar ftr(0), ttr(0);
    for (int i = 0; i < 8; ++i) ftr += f_endo.at(i, i), ttr += t_endo.at(i, i);
    if (!ftr.is_zero() || !ttr.is_zero()) all_ok = false;
    if (!(f_endo.transposed() == f_endo) || !(t_endo.transposed() == t_endo)) all_ok = false;
  }
  r.claims.push_back(check("sasakian3.endomorphisms",
                           "flux and torsion endomorphism matrices match the block displays for 5 "
                           "members (traceless, symmetric, torsion = blocks + 7 flux, eigenvalue 14/3)",
                           "block form", all_ok ? "block form" : "mismatch", all_ok));
  return r;
}

ScenarioReport criterion12() {
  ScenarioReport r;
  r.name = "criterion-12 eigenvalue bound instances";
  const StandardModel& m = standard_model();
  BoundReport b = bound_check(Scalar(14, 3), 7, Scalar(42));
  r.claims.push_back(check("bound.three-contact", "c = 14/3, n = 7, Scal = 42 realizes the bound",
                           "196/9 = 196/9 (equality)",
                           b.lhs.to_string() + " vs " + b.rhs.to_string() +
                               (b.status == BoundStatus::equality ? " (equality)" : " (other)"),
                           b.status == BoundStatus::equality && b.lhs == Scalar(196, 9)));

  // homogeneous quotient at (1,1) with coupled parameters
  auto [tfam, ffam] = aw_invariant_families();
  AloffWallachModel model = aw_model(m.rep7, Scalar(1), Scalar(1));
  KillingSystem sys =
      assemble(m.rep7, MapConn{model.spin_lift}, tfam, ffam, Scalar(3, 4), Scalar(1), m.psi(3), &m.basis);
  auto outcome = solve_killing(sys);
  bool have_eigen = !is_infeasible(outcome);
  Scalar c(0);
  if (have_eigen) {
    const auto& space = space_of(outcome);
    std::vector<Scalar> tc;
    for (int j = 0; j < tfam.size(); ++j)
      tc.push_back(space.particular[space.label_index(tfam.label(j))]);
    auto ev = eigenvalue_on(m.rep7, tfam.member(tc), m.psi(3));
    have_eigen = ev.has_value();
    if (have_eigen) c = *ev;
    for (const auto& g : space.kernel) {
      std::vector<Scalar> gc;
      for (int j = 0; j < tfam.size(); ++j) gc.push_back(g[space.label_index(tfam.label(j))]);
      if (!act_form(m.rep7, tfam.member(gc), m.psi(3)).is_zero()) have_eigen = false;
    }
  }
  if (!have_eigen) {
    r.claims.push_back(note("bound.aw", "no eigenrelation holds on the family at (1,1); bound not applicable",
                            "reported"));
    return r;
  }
  auto [ric, scal] = aw_curvature(model);
  BoundReport b2 = bound_check(c, 7, scal);
  r.claims.push_back(check("bound.aw",
                           "at (s,y) = (1,1), coupled parameters: c^2 strictly exceeds the bound",
                           "strict", b2.lhs.to_string() + " vs " + b2.rhs.to_string() +
                                         (b2.status == BoundStatus::strict ? " (strict)"
                                          : b2.status == BoundStatus::equality ? " (equality)"
                                                                               : " (violated)"),
                           b2.status == BoundStatus::strict));
  r.claims.push_back(note("bound.aw.eigenvalue", "torsion eigenvalue across the whole family",
                          "c = " + c.to_string() + ", Scal = " + scal.to_string()));
  return r;
}

ScenarioReport criterion13() {
  ScenarioReport r;
  r.name = "criterion-13 curvature cross-checks";
  const StandardModel& m = standard_model();
  struct Case {
    Rational s, y;
    bool einstein;
    std::optional<Rational> scal;
  };
  const Case cases[] = {{Rational(1), Rational(2), true, Rational(42)},
                        {Rational(1), Rational(2, 5), true, Rational(378, 25)},
                        {Rational(1), Rational(1), false, std::nullopt}};
  for (const auto& cs : cases) {
    AloffWallachModel model = aw_model(m.rep7, Scalar(cs.s), Scalar(cs.y));
    auto [ric, scal] = aw_curvature(model);
    bool einstein = true;
    for (int i = 0; i < 7 && einstein; ++i)
      for (int j = 0; j < 7 && einstein; ++j) {
        Scalar expect = i == j ? scal / Scalar(7) : Scalar(0);
        if (!(ric.at(i, j) == expect)) einstein = false;
      }
    std::string name = "aw.curvature(" + cs.s.get_str() + "," + cs.y.get_str() + ")";
    bool ok = einstein == cs.einstein && (!cs.scal || scal == Scalar(*cs.scal));
    std::string expected = cs.einstein ? "Einstein, Scal = " + cs.scal->get_str() : "not Einstein";
    std::string computed = (einstein ? "Einstein" : "not Einstein") +
                           std::string(", Scal = ") + scal.to_string();
    r.claims.push_back(check(name, "exact Ricci computation", expected, computed, ok));
  }
  return r;
}

ScenarioReport criterion14() {
  ScenarioReport r;
  r.name = "criterion-14 group-manifold example";
  ScenarioOptions opts;
  opts.seed = 14;
  ScenarioReport sub = run_scenario("lie-group", opts);
  r.claims = sub.claims;
  return r;
}

}  // namespace

std::vector<ScenarioReport> verify_all() {
  std::vector<ScenarioReport> reports;
  ScenarioReport (*criteria[])() = {criterion1,  criterion2,  criterion3,  criterion4,
                                    criterion5,  criterion6,  criterion7,  criterion8,
                                    criterion9,  criterion10, criterion11, criterion12,
                                    criterion13, criterion14};
  for (auto* fn : criteria) {
    CriterionTimer timer;
    ScenarioReport r = fn();
    r.timing_ms = timer.ms();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace spinflux
