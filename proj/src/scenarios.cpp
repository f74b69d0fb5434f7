#include "spinflux/scenarios.hpp"

#include <chrono>
#include <sstream>

namespace spinflux {

bool ScenarioReport::all_passed() const { return fail_count() == 0; }

int ScenarioReport::fail_count() const {
  int n = 0;
  for (const auto& c : claims)
    if (c.status == Claim::Status::fail) ++n;
  return n;
}

Spinor seeded_spinor(SmallRng& rng, int dim) {
  Spinor psi{std::vector<Scalar>(dim)};
  while (true) {
    for (auto& c : psi.c) c = Scalar(rng.small_rational());
    if (dim != 16) {
      if (!psi.is_zero()) return psi;
      continue;
    }
    bool top = false, bottom = false;
    for (int i = 0; i < 8; ++i) top = top || !psi.c[i].is_zero();
    for (int i = 8; i < 16; ++i) bottom = bottom || !psi.c[i].is_zero();
    if (top && bottom) return psi;
  }
}

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

std::string fmt_dim(const SolveOutcome& outcome) {
  return is_infeasible(outcome) ? "empty" : std::to_string(space_of(outcome).dimension());
}

// residual of (conn(X) + 1/4 (X,T) + p (X,F) + q (X^F)) psi over all X
bool equation_holds(const CliffordRep& rep, const ConnectionTerm& conn, const ExteriorForm& T,
                    const ExteriorForm& F, const Scalar& p, const Scalar& q, const Spinor& psi) {
  for (int i = 1; i <= rep.n; ++i) {
    Spinor r{std::vector<Scalar>(rep.dim)};
    if (const auto* k = std::get_if<KillingConn>(&conn))
      r = act_vector(rep, i, psi) * k->lambda;
    else if (const auto* m = std::get_if<MapConn>(&conn))
      r = Spinor{m->endo.at(i - 1).apply(psi.c)};
    r = r + act_form(rep, contract(i, T), psi) * Scalar(1, 4);
    r = r + act_form(rep, contract(i, F), psi) * p;
    r = r + act_form(rep, wedge(ExteriorForm::monomial(rep.n, {i}), F), psi) * q;
    if (!r.is_zero()) return false;
  }
  return true;
}

std::pair<ExteriorForm, ExteriorForm> member_forms(const std::vector<Scalar>& member,
                                                   const AffineSolutionSpace& space,
                                                   const ParametricFormFamily& tfam,
                                                   const ParametricFormFamily& ffam) {
  std::vector<Scalar> tc, fc;
  for (int j = 0; j < tfam.size(); ++j) tc.push_back(member[space.label_index(tfam.label(j))]);
  for (int j = 0; j < ffam.size(); ++j) fc.push_back(member[space.label_index(ffam.label(j))]);
  return {tfam.member(tc), ffam.member(fc)};
}

std::string scalar_str(const Scalar& v) { return v.to_string(); }

std::string spinor_str(const Spinor& psi) {
  std::string out = "[";
  for (std::size_t i = 0; i < psi.c.size(); ++i) {
    if (i) out += " ";
    out += psi.c[i].to_string();
  }
  return out + "]";
}

// affine-linear functional on the unknowns, given as label -> coefficient
std::vector<Scalar> functional_row(const AffineSolutionSpace& space,
                                   const std::map<std::string, Scalar>& coeffs) {
  std::vector<Scalar> row(space.labels.size());
  for (const auto& [label, v] : coeffs) row[space.label_index(label)] = v;
  return row;
}

bool functional_vanishes_on(const AffineSolutionSpace& space,
                            const std::map<std::string, Scalar>& coeffs, const Scalar& offset) {
  auto vals = evaluate_on_space(space, functional_row(space, coeffs), offset);
  for (const auto& v : vals)
    if (!v.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// sasakian3

struct SasakianRun {
  KillingSystem sys;
  SolveOutcome outcome;
  SolveStats stats;
};

SasakianRun run_sasakian_system(const Spinor& psi, const Scalar& p, const Scalar& q,
                                bool t_zero, bool f_zero) {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = su2_families();
  SasakianRun run{sasakian_system(m.rep7, psi, p, q), SolveOutcome{}, SolveStats{}};
  std::vector<Matrix> extra;
  const int total = int(run.sys.labels.size());
  if (t_zero)
    extra.push_back(widen_constraint(constraint_rows(m.rep7, tfam, psi), 0, total));
  if (f_zero)
    extra.push_back(widen_constraint(constraint_rows(m.rep7, ffam, psi), tfam.size(), total));
  run.outcome = solve_killing(run.sys, extra, &run.stats);
  return run;
}

ScenarioReport scenario_sasakian3(const ScenarioOptions& opts) {
  ScenarioReport report;
  report.name = "sasakian3";
  const StandardModel& m = standard_model();
  Scalar p = opts.p.value_or(Scalar::var(Var::p));
  Scalar q = opts.q.value_or(Scalar::var(Var::q));
  report.params = {{"p", p.to_string()}, {"q", q.to_string()}};
  if (opts.t_psi_zero) report.params.push_back({"constraint", "t-psi-zero"});
  if (opts.f_psi_zero) report.params.push_back({"constraint", "f-psi-zero"});
  const Spinor psi = m.psi(3);

  SasakianRun run = run_sasakian_system(psi, p, q, opts.t_psi_zero, opts.f_psi_zero);
  report.claims.push_back(check("sasakian3.system", "56 equations in 20 unknowns", "56x20",
                                std::to_string(run.stats.total_rows) + "x" +
                                    std::to_string(run.sys.labels.size()),
                                run.stats.total_rows == 56 && run.sys.labels.size() == 20));

  Scalar coupling = Scalar(4) * p - Scalar(3) * q;
  bool coupled = coupling.is_zero();
  if (!opts.t_psi_zero && !opts.f_psi_zero) {
    report.claims.push_back(check("sasakian3.dimension", "solution space is a 7-dimensional affine space",
                                  "7", fmt_dim(run.outcome),
                                  !is_infeasible(run.outcome) && space_of(run.outcome).dimension() == 7));
  } else if (opts.t_psi_zero && opts.f_psi_zero) {
    report.claims.push_back(check("sasakian3.joint-constraints",
                                  "torsion and flux constraints cannot hold simultaneously", "empty",
                                  fmt_dim(run.outcome), is_infeasible(run.outcome)));
  } else if (opts.t_psi_zero && coupled) {
    report.claims.push_back(check("sasakian3.t-constraint.coupled",
                                  "no torsion annihilates the spinor at the coupled parameters",
                                  "empty", fmt_dim(run.outcome), is_infeasible(run.outcome)));
  } else {
    report.claims.push_back(check(
        opts.t_psi_zero ? "sasakian3.t-constraint" : "sasakian3.f-constraint",
        "constraint cuts the solution space to dimension 6", "6", fmt_dim(run.outcome),
        !is_infeasible(run.outcome) && space_of(run.outcome).dimension() == 6));
  }

  if (!is_infeasible(run.outcome)) {
    const auto& space = space_of(run.outcome);
    auto [tfam, ffam] = su2_families();
    // torsion eigenvalue on the whole family at the coupled parameters
    if (coupled) {
      auto [t_part, f_part] = member_forms(space.particular, space, tfam, ffam);
      auto ev = eigenvalue_on(m.rep7, t_part, psi);
      bool ok = ev.has_value() && *ev == Scalar(14, 3);
      for (const auto& g : space.kernel) {
        auto [tg, fg] = member_forms(g, space, tfam, ffam);
        if (!act_form(m.rep7, tg, psi).is_zero()) ok = false;
      }
      report.claims.push_back(check("sasakian3.coupling.eigenvalue",
                                    "every torsion form in the family acts with eigenvalue 14/3",
                                    "14/3", ev ? ev->to_string() : "no eigenrelation", ok));
    }
    // reference table, in the symbolic run
    if (!p.is_rational() && !q.is_rational() && !opts.t_psi_zero && !opts.f_psi_zero) {
      auto re = with_free_variables(space, sasakian_table().free_labels);
      bool ok = re.has_value() && !table_mismatch(*re, sasakian_table());
      report.claims.push_back(check("sasakian3.table",
                                    "solved coefficients match the reference table", "verbatim",
                                    ok ? "verbatim" : "mismatch", ok));
      if (re) report.solution_summary = space_to_json(*re);
    } else {
      report.solution_summary = space_to_json(space);
    }
  }
  report.claims.push_back(note("sasakian3.su2-generators",
                               "third annihilating 2-form generator in use",
                               "e36 + e45 (printed variant e36 + e56 does not close as a Lie algebra)"));
  return report;
}

// ---------------------------------------------------------------------------
// g2

ScenarioReport scenario_g2(const ScenarioOptions& opts) {
  ScenarioReport report;
  report.name = "g2";
  const StandardModel& m = standard_model();
  Scalar p = opts.p.value_or(Scalar::var(Var::p));
  Scalar q = opts.q.value_or(Scalar::var(Var::q));
  Scalar f = opts.f.value_or(Scalar::var(Var::f));
  report.params = {{"p", p.to_string()},
                   {"q", q.to_string()},
                   {"f", f.to_string()},
                   {"seed", std::to_string(opts.seed)}};
  SmallRng rng(opts.seed);
  Spinor psi = seeded_spinor(rng, 8);
  report.params.push_back({"spinor", spinor_str(psi)});

  ExteriorForm w3 = form_from_spinor(m.rep7, psi);
  Spinor w3psi = act_form(m.rep7, w3, psi);
  report.claims.push_back(check("g2.omega3.eigenvalue", "the 3-form of the spinor acts by -7",
                                "-7*psi", w3psi == psi * Scalar(-7) ? "-7*psi" : "other",
                                w3psi == psi * Scalar(-7)));
  report.claims.push_back(check("g2.omega3.norm", "squared norm of the 3-form", "7",
                                norm_sq(w3).to_string(), norm_sq(w3) == Scalar(7)));

  AffineSolutionSpace plane = g2_relation(m.rep7, psi);
  // expected: the plane 16p + 3r - 12q + 4 = 0 in labels (r, p, q)
  Matrix row(1, 3);
  row.at(0, 0) = Scalar(3);
  row.at(0, 1) = Scalar(16);
  row.at(0, 2) = Scalar(-12);
  auto expected = solve_affine(row, {Scalar(-4)}, {"r", "p", "q"});
  bool plane_ok = plane.dimension() == 2 && same_affine_space(plane, space_of(expected));
  report.claims.push_back(check("g2.relation", "solvability locus in (r, p, q)",
                                "16p = -4 + 12q - 3r", plane_ok ? "16p = -4 + 12q - 3r" : "other",
                                plane_ok));
  report.solution_summary = space_to_json(plane);

  auto [T, F] = g2_corollary_family(m.rep7, psi, f, p, q);
  bool solves = equation_holds(m.rep7, KillingConn{Scalar(1)}, T, F, p, q, psi);
  report.claims.push_back(check("g2.family.solves",
                                "the admissible pair solves the field equation with unit Killing number",
                                "0", solves ? "0" : "nonzero residual", solves));

  // decoupling at the coupled parameters
  auto [Tc, Fc] = g2_corollary_family(m.rep7, psi, f, Scalar(3, 4), Scalar(1));
  bool first = true, second = true;
  for (int i = 1; i <= 7 && (first || second); ++i) {
    Spinor r1 = act_vector(m.rep7, i, psi) + act_form(m.rep7, contract(i, Tc), psi) * Scalar(1, 4);
    if (!r1.is_zero()) first = false;
    Spinor r2 = act_form(m.rep7, contract(i, Fc), psi) * Scalar(3) +
                act_form(m.rep7, wedge(ExteriorForm::monomial(7, {i}), Fc), psi) * Scalar(4);
    if (!r2.is_zero()) second = false;
  }
  report.claims.push_back(check("g2.decoupling",
                                "at the coupled parameters the two halves hold separately",
                                "both zero",
                                std::string(first ? "first zero" : "first nonzero") + ", " +
                                    (second ? "second zero" : "second nonzero"),
                                first && second));
  report.claims.push_back(note("g2.torsion-scale",
                               "torsion multiple in use",
                               "T = ((12q - 16p) f / 3 - 4/3) w3 (satisfies the relation for every f; "
                               "a printed variant with f in the denominator does not)"));
  return report;
}

// ---------------------------------------------------------------------------
// aloff-wallach

struct AwRun {
  AloffWallachModel model;
  KillingSystem sys;
  SolveOutcome outcome;
  SolveStats stats;
};

AwRun run_aw_system(const Scalar& s, const Scalar& y, const Scalar& p, const Scalar& q,
                    bool t_zero, bool f_zero) {
  const StandardModel& m = standard_model();
  auto [tfam, ffam] = aw_invariant_families();
  AwRun run{aw_model(m.rep7, s, y), KillingSystem{}, SolveOutcome{}, SolveStats{}};
  run.sys = assemble(m.rep7, MapConn{run.model.spin_lift}, tfam, ffam, p, q, m.psi(3), &m.basis);
  std::vector<Matrix> extra;
  const int total = int(run.sys.labels.size());
  if (t_zero) extra.push_back(widen_constraint(constraint_rows(m.rep7, tfam, m.psi(3)), 0, total));
  if (f_zero)
    extra.push_back(widen_constraint(constraint_rows(m.rep7, ffam, m.psi(3)), tfam.size(), total));
  run.outcome = solve_killing(run.sys, extra, &run.stats);
  return run;
}

const std::map<std::string, Scalar> kAwConstraintCombo = {
    {"alpha4", Scalar(-1)}, {"beta4", Scalar(1)}, {"gamma4", Scalar(1)},
    {"omega4", Scalar(2)},  {"rho4", Scalar(2)}};

ScenarioReport scenario_aw(const ScenarioOptions& opts) {
  ScenarioReport report;
  report.name = "aloff-wallach";
  const StandardModel& m = standard_model();
  Scalar s = opts.s.value_or(Scalar::var(Var::s));
  Scalar y = opts.y.value_or(Scalar::var(Var::y));
  Scalar p = opts.p.value_or(Scalar::var(Var::p));
  Scalar q = opts.q.value_or(Scalar::var(Var::q));
  report.params = {{"s", s.to_string()},
                   {"y", y.to_string()},
                   {"p", p.to_string()},
                   {"q", q.to_string()}};
  if (opts.t_psi_zero) report.params.push_back({"constraint", "t-psi-zero"});
  if (opts.f_psi_zero) report.params.push_back({"constraint", "f-psi-zero"});

  AwRun run = run_aw_system(s, y, p, q, opts.t_psi_zero, opts.f_psi_zero);
  report.claims.push_back(check("aw.trivial-rows", "28 of the 56 equations are identically zero",
                                "28", std::to_string(run.stats.zero_rows),
                                run.stats.zero_rows == 28));

  Scalar coupling = Scalar(6) * q - Scalar(8) * p;
  if (!opts.t_psi_zero && !opts.f_psi_zero) {
    report.claims.push_back(check("aw.dimension", "10-dimensional affine solution space", "10",
                                  fmt_dim(run.outcome),
                                  !is_infeasible(run.outcome) && space_of(run.outcome).dimension() == 10));
  } else if (opts.t_psi_zero && opts.f_psi_zero) {
    report.claims.push_back(check("aw.joint-constraints",
                                  "both constraints together have no solution", "empty",
                                  fmt_dim(run.outcome), is_infeasible(run.outcome)));
  } else if (opts.t_psi_zero && coupling.is_zero()) {
    report.claims.push_back(check("aw.t-constraint.coupled",
                                  "no torsion in the family annihilates the spinor at the coupling",
                                  "empty", fmt_dim(run.outcome), is_infeasible(run.outcome)));
  } else {
    report.claims.push_back(check(opts.t_psi_zero ? "aw.t-constraint" : "aw.f-constraint",
                                  "constraint cuts the space to dimension 9", "9",
                                  fmt_dim(run.outcome),
                                  !is_infeasible(run.outcome) && space_of(run.outcome).dimension() == 9));
  }

  if (!is_infeasible(run.outcome) && !opts.t_psi_zero && !opts.f_psi_zero) {
    const auto& space = space_of(run.outcome);
    // the three internal flux relations hold on the whole space
    bool rel_ok =
        functional_vanishes_on(space, {{"delta4", Scalar(1)}, {"eps4", Scalar(-1)}, {"eta4", Scalar(2)}},
                               Scalar(0)) &&
        functional_vanishes_on(space, {{"mu4", Scalar(1)}, {"xi4", Scalar(-1)}, {"nu4", Scalar(-2)}},
                               Scalar(0)) &&
        functional_vanishes_on(space, {{"lambda4", Scalar(1)}, {"pi4", Scalar(-1)}}, Scalar(0));
    report.claims.push_back(check("aw.flux-relations",
                                  "delta4 = eps4 - 2 eta4, mu4 = xi4 + 2 nu4, lambda4 = pi4",
                                  "hold", rel_ok ? "hold" : "violated", rel_ok));

    // torsion action on the distinguished spinor is scalar on the whole family
    auto [tfam, ffam] = aw_invariant_families();
    auto [t_part, f_part] = member_forms(space.particular, space, tfam, ffam);
    auto ev = eigenvalue_on(m.rep7, t_part, m.psi(3));
    bool eigen = ev.has_value();
    std::ostringstream eigeninfo;
    if (eigen) eigeninfo << "c = " << ev->to_string();
    for (std::size_t g = 0; g < space.kernel.size() && eigen; ++g) {
      auto [tg, fg] = member_forms(space.kernel[g], space, tfam, ffam);
      auto evg = eigenvalue_on(m.rep7, tg, m.psi(3));
      if (!evg) eigen = false;
      else if (!evg->is_zero())
        eigeninfo << " + (" << evg->to_string() << ")*kernel";
    }
    report.claims.push_back(note("aw.torsion-action",
                                 "torsion action on the distinguished spinor across the family",
                                 eigen ? "proportional; " + eigeninfo.str() : "no eigenrelation"));

    if (!s.is_rational()) {
      auto re = with_free_variables(space, aw_table().free_labels);
      bool ok = re.has_value() && !table_mismatch(*re, aw_table());
      report.claims.push_back(check("aw.table", "solved coefficients match the reference table",
                                    "verbatim", ok ? "verbatim" : "mismatch", ok));
      if (re) report.solution_summary = space_to_json(*re);
    } else {
      report.solution_summary = space_to_json(space);
    }
  }

  if (s.is_rational() && y.is_rational()) {
    auto [ric, scal] = aw_curvature(run.model);
    bool einstein = true;
    for (int i = 0; i < 7 && einstein; ++i)
      for (int j = 0; j < 7 && einstein; ++j)
        if (!((i == j ? ric.at(i, j) - scal / Scalar(7) : ric.at(i, j)).is_zero())) einstein = false;
    report.claims.push_back(note("aw.curvature", "scalar curvature and Einstein property",
                                 "Scal = " + scal.to_string() +
                                     (einstein ? " (Einstein)" : " (not Einstein)")));
  }
  report.claims.push_back(
      note("aw.killing-number",
           "constant sections at (s, y) = (1, 2) satisfy the Riemannian Killing equation with "
           "number -1/2 in this realization"));
  return report;
}

// ---------------------------------------------------------------------------
// dim8

ScenarioReport scenario_dim8(const ScenarioOptions& opts) {
  ScenarioReport report;
  report.name = "dim8";
  const StandardModel& m = standard_model();
  report.params = {{"seed", std::to_string(opts.seed)}};
  SmallRng rng(opts.seed);
  Spinor psi = seeded_spinor(rng, 16);
  report.params.push_back({"spinor", spinor_str(psi)});
  auto [tfam, ffam] = dim8_families();
  report.claims.push_back(check("dim8.families", "56 + 70 = 126 unknowns", "56+70",
                                std::to_string(tfam.size()) + "+" + std::to_string(ffam.size()),
                                tfam.size() == 56 && ffam.size() == 70));
  KillingSystem sys = assemble(m.rep8, ZeroConn{}, tfam, ffam, Scalar(1), Scalar(1), psi);
  SolveStats stats;
  auto outcome = solve_killing(sys, {}, &stats);
  report.claims.push_back(check("dim8.rows", "128 equations", "128",
                                std::to_string(stats.total_rows), stats.total_rows == 128));
  report.claims.push_back(check("dim8.rank", "rank of the system", "101",
                                std::to_string(stats.rank), stats.rank == 101));
  report.claims.push_back(check("dim8.kernel", "parameter count of the solution family", "25",
                                fmt_dim(outcome),
                                !is_infeasible(outcome) && space_of(outcome).dimension() == 25));
  report.claims.push_back(note(
      "dim8.rank-bound",
      "the coefficient map is equivariant under the joint stabilizer of the chirality pair (a "
      "14-dimensional exceptional group); its 27-dimensional isotypic component occurs three "
      "times among the unknowns but only twice among the equations, so the rank is at most 99 "
      "and the kernel at least 27 for every admissible spinor. The computed values 99 and 27 "
      "are therefore forced; a 25-parameter subfamily exists inside the kernel."));

  if (!is_infeasible(outcome)) {
    const auto& space = space_of(outcome);
    // resubstitution for seeded members
    bool resub = true;
    for (int t = 0; t < 3 && resub; ++t) {
      std::vector<Scalar> coeffs;
      for (int i = 0; i < space.dimension(); ++i) coeffs.push_back(Scalar(rng.small_rational()));
      auto member = space.member(coeffs);
      auto [T, F] = member_forms(member, space, tfam, ffam);
      resub = equation_holds(m.rep8, ZeroConn{}, T, F, Scalar(1), Scalar(1), psi);
    }
    report.claims.push_back(check("dim8.resubstitution",
                                  "seeded members satisfy the equation in all frame directions",
                                  "0", resub ? "0" : "nonzero residual", resub));
    report.solution_summary = Json{{"dimension", space.dimension()},
                                   {"rank", stats.rank},
                                   {"rows", stats.total_rows},
                                   {"unknowns", int(space.labels.size())}};
  }
  return report;
}

// ---------------------------------------------------------------------------
// lie-group

ScenarioReport scenario_lie_group(const ScenarioOptions& opts) {
  ScenarioReport report;
  report.name = "lie-group";
  const StandardModel& m = standard_model();
  report.params = {{"seed", std::to_string(opts.seed)}};

  // su(2): torsion is a multiple of the volume form
  LieAlgebraModel su2 = su2_algebra();
  ExteriorForm t0_su2 = lie_group_torsion(su2);
  bool su2_ok = t0_su2.terms().size() == 1 && !t0_su2.coefficient({1, 2, 3}).is_zero();
  report.claims.push_back(check("lie-group.su2.torsion",
                                "canonical torsion of su(2) is a nonzero multiple of the volume form",
                                "c * e123, c != 0", t0_su2.to_string(), su2_ok));

  LieAlgebraModel su3 = su3_algebra();
  bool biinv = su3.metric_is_biinvariant();
  report.claims.push_back(check("lie-group.su3.metric", "the metric is biinvariant (ad-skew)",
                                "yes", biinv ? "yes" : "no", biinv));
  ExteriorForm t0 = lie_group_torsion(su3);  // throws if not totally skew
  report.claims.push_back(check("lie-group.su3.torsion-skew",
                                "canonical torsion is totally skew-symmetric", "yes", "yes", true));

  auto [P, Q] = su3_orthonormal_torsion_split();
  report.claims.push_back(note(
      "lie-group.su3.frame",
      "no rational orthonormal frame exists (the Cartan part of the metric represents x^2 + 3y^2, "
      "discriminant 3); in the frame u1..u7, u8 = diag(i,i,-2i)/sqrt(3) the torsion splits as "
      "P + sqrt(3) Q with rational components, and the field equation is checked on each "
      "component separately"));

  // constant spinor: shifted pairs satisfy the full equation
  SmallRng rng(opts.seed);
  Spinor psi = seeded_spinor(rng, 16);
  report.params.push_back({"spinor", spinor_str(psi)});
  auto [tfam, ffam] = dim8_families();
  KillingSystem sys = assemble(m.rep8, ZeroConn{}, tfam, ffam, Scalar(1), Scalar(1), psi);
  SolveStats stats;
  auto outcome = solve_killing(sys, {}, &stats);
  bool shifted_ok = !is_infeasible(outcome);
  int checked = 0;
  if (shifted_ok) {
    const auto& space = space_of(outcome);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Scalar> coeffs;
      for (int i = 0; i < space.dimension(); ++i) coeffs.push_back(Scalar(rng.small_rational()));
      auto member = space.member(coeffs);
      auto [Tp, F] = member_forms(member, space, tfam, ffam);
      // T = T' - T0 with T0 = P + sqrt(3) Q; the covariant derivative of a
      // constant spinor contributes + (1/4)(X , T0) psi, so the rational and
      // the sqrt(3) components of the full equation must vanish separately
      ExteriorForm t_rational = Tp - P;
      for (int i = 1; i <= 8 && shifted_ok; ++i) {
        ExteriorForm ei = ExteriorForm::monomial(8, {i});
        Spinor rat = act_form(m.rep8, contract(i, P), psi) * Scalar(1, 4) +
                     act_form(m.rep8, contract(i, t_rational), psi) * Scalar(1, 4) +
                     act_form(m.rep8, contract(i, F), psi) + act_form(m.rep8, wedge(ei, F), psi);
        Spinor irr = act_form(m.rep8, contract(i, Q), psi) * Scalar(1, 4) +
                     act_form(m.rep8, contract(i, Q * Scalar(-1)), psi) * Scalar(1, 4);
        if (!rat.is_zero() || !irr.is_zero()) shifted_ok = false;
      }
      if (shifted_ok) ++checked;
    }
  }
  report.claims.push_back(check("lie-group.shifted-family",
                                "shifted pairs (T' - T0, F) satisfy the constant-spinor equation",
                                "0 (both components, 3 members)",
                                shifted_ok ? "0 (" + std::to_string(checked) + " members)"
                                           : "nonzero residual",
                                shifted_ok && checked == 3));
  report.claims.push_back(note("lie-group.solution-dimension",
                               "dimension of the algebraic solution family in use",
                               fmt_dim(outcome)));
  return report;
}

}  // namespace

ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ScenarioReport report;
  if (name == "sasakian3")
    report = scenario_sasakian3(opts);
  else if (name == "g2")
    report = scenario_g2(opts);
  else if (name == "aloff-wallach")
    report = scenario_aw(opts);
  else if (name == "dim8")
    report = scenario_dim8(opts);
  else if (name == "lie-group")
    report = scenario_lie_group(opts);
  else
    throw std::invalid_argument("unknown scenario '" + name + "'");
  report.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string render_text(const ScenarioReport& report) {
  std::ostringstream os;
  os << "scenario " << report.name;
  for (const auto& [k, v] : report.params) os << " --" << k << " " << v;
  os << "\n";
  for (const auto& c : report.claims) {
    const char* tag = c.status == Claim::Status::pass ? "PASS"
                      : c.status == Claim::Status::fail ? "FAIL"
                                                        : "NOTE";
    os << "[" << tag << "] " << c.anchor << ": ";
    if (c.status == Claim::Status::note) {
      os << c.text;
      if (!c.computed.empty()) os << " -- " << c.computed;
    } else {
      os << c.text << ": expected " << c.expected << " computed " << c.computed;
    }
    os << "\n";
  }
  return os.str();
}

Json report_to_json(const ScenarioReport& report) {
  Json j;
  j["scenario"] = report.name;
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["parameters"] = std::move(params);
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json jc;
    jc["anchor"] = c.anchor;
    jc["claim"] = c.text;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["status"] = c.status == Claim::Status::pass ? "pass"
                   : c.status == Claim::Status::fail ? "fail"
                                                     : "reported";
    claims.push_back(std::move(jc));
  }
  j["claims"] = std::move(claims);
  if (report.solution_summary) j["solution"] = *report.solution_summary;
  return j;
}

}  // namespace spinflux
