#include <doctest.h>

#include "spinflux/json_io.hpp"
#include "spinflux/rng.hpp"
#include "spinflux/scenarios.hpp"
#include "spinflux/alignment.hpp"
#include "spinflux/geometries.hpp"

using namespace spinflux;

TEST_CASE("scalar JSON round-trip is string-exact") {
  std::vector<Scalar> samples{
      Scalar(0), Scalar(7, 3), Scalar(-1, 2), Scalar::var(Var::p),
      (Scalar(4) * Scalar::var(Var::p) - Scalar(3) * Scalar::var(Var::q)) /
          (Scalar::var(Var::s) * Scalar(3)),
      Scalar::of("(-2 - 8*s^2 + 4*y)/(3*s)")};
  for (const auto& s : samples) {
    Json j = scalar_to_json(s);
    Scalar back = scalar_from_json(j);
    CHECK(back == s);
    CHECK(scalar_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("matrix JSON round-trip") {
  SmallRng rng(3);
  Matrix m(3, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      m.at(i, j) = Scalar(rng.small_rational()) + Scalar::var(Var::y) * Scalar(rng.int_in(-2, 2));
  Json j = matrix_to_json(m, {"a", "b", "c", "d"});
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_to_json(matrix_from_json(j), {"a", "b", "c", "d"}).dump() == j.dump());
}

TEST_CASE("solution space JSON round-trip") {
  Matrix m(1, 3);
  m.at(0, 0) = Scalar::var(Var::p);
  m.at(0, 1) = Scalar(1);
  m.at(0, 2) = Scalar(1);
  auto outcome = solve_affine(m, {Scalar(1)}, {"x", "y", "z"});
  const auto& space = space_of(outcome);
  Json j = space_to_json(space);
  AffineSolutionSpace back = space_from_json(j);
  CHECK(back.labels == space.labels);
  CHECK(back.particular == space.particular);
  CHECK(back.kernel == space.kernel);
  CHECK(back.conditions.size() == space.conditions.size());
  CHECK(space_to_json(back).dump() == j.dump());
}

TEST_CASE("form JSON round-trip") {
  ExteriorForm w(7, 3);
  w.add_term({1, 3, 5}, Scalar(2, 3));
  w.add_term({2, 4, 6}, Scalar::var(Var::f));
  Json j = form_to_json(w);
  CHECK(form_from_json(j) == w);
  CHECK(form_to_json(form_from_json(j)).dump() == j.dump());
}

TEST_CASE("scenario reports are byte-deterministic") {
  ScenarioOptions opts;
  opts.p = Scalar(3, 4);
  opts.q = Scalar(1);
  auto r1 = run_scenario("sasakian3", opts);
  auto r2 = run_scenario("sasakian3", opts);
  CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
  CHECK(render_text(r1) == render_text(r2));
}

TEST_CASE("unknown scenarios are rejected") {
  CHECK_THROWS_AS(run_scenario("nope", {}), std::invalid_argument);
}

TEST_CASE("assembled systems serialize with provenance") {
  const StandardModel& m = standard_model();
  KillingSystem sys = sasakian_system(m.rep7, m.psi(3), Scalar(1), Scalar(2));
  Json j = killing_system_to_json(sys);
  CHECK(j["rows"] == 56);
  CHECK(j["cols"] == 20);
  CHECK(j["provenance"].size() == 56);
  CHECK(j["provenance"][0]["frame"] == 1);
  CHECK(matrix_from_json(j) == sys.m);
}

TEST_CASE("generator matrices export as integers") {
  const StandardModel& m = standard_model();
  Json j = generators_to_json(m.rep7);
  CHECK(j["generators"].size() == 7);
  CHECK(j["generators"][0].size() == 8);
}
