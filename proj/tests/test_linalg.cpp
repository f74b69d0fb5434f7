#include <doctest.h>

#include <algorithm>

#include "spinflux/linalg.hpp"
#include "spinflux/rng.hpp"

using namespace spinflux;

namespace {

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rref of the identity is itself with no conditions") {
  Matrix id = Matrix::identity(2);
  RrefResult r = rref(id);
  CHECK(r.r == id);
  CHECK(r.pivot_columns == std::vector<int>{0, 1});
  CHECK(r.conditions.empty());
}

TEST_CASE("a parameter-dependent pivot records its genericity condition") {
  Matrix m(1, 1);
  m.at(0, 0) = Scalar(4) * Scalar::var(Var::p) - Scalar(3) * Scalar::var(Var::q);
  RrefResult r = rref(m);
  CHECK(r.r.at(0, 0) == Scalar(1));
  REQUIRE(r.conditions.size() == 1);
  CHECK(r.conditions[0].value.to_string() == "4*p - 3*q");
  CHECK(r.conditions[0].special_locus);
}

TEST_CASE("zero matrix has rank 0 and full kernel") {
  Matrix m(3, 4);
  CHECK(rank(m) == 0);
  auto outcome = solve_affine(m, std::vector<Scalar>(3));
  REQUIRE(!is_infeasible(outcome));
  CHECK(space_of(outcome).dimension() == 4);
}

TEST_CASE("x + y = 1 has a one-dimensional solution set") {
  Matrix m(1, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(1);
  auto outcome = solve_affine(m, {Scalar(1)});
  REQUIRE(!is_infeasible(outcome));
  const auto& s = space_of(outcome);
  CHECK(s.dimension() == 1);
  // particular solves, kernel annihilates
  auto res = m.apply(s.particular);
  CHECK(res[0] == Scalar(1));
  CHECK(m.apply(s.kernel[0])[0].is_zero());
}

TEST_CASE("inconsistent systems report the obstruction") {
  Matrix m(2, 1);
  m.at(0, 0) = Scalar(1);
  m.at(1, 0) = Scalar(1);
  auto outcome = solve_affine(m, {Scalar(1), Scalar(2)});
  REQUIRE(is_infeasible(outcome));
  CHECK(!std::get<Infeasible>(outcome).obstructions.empty());
}

TEST_CASE("rank is invariant under row shuffles") {
  SmallRng rng(7);
  Matrix m(4, 5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) m.at(i, j) = Scalar(rng.small_rational());
  int r0 = rank(m);
  std::vector<int> perm{2, 0, 3, 1};
  Matrix shuffled(4, 5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) shuffled.at(i, j) = m.at(perm[i], j);
  CHECK(rank(shuffled) == r0);
}

TEST_CASE("rref row space: every original row is reproduced by R") {
  // R = E*M for invertible E means M and R have the same row space; check by
  // re-solving random specializations of a parametric matrix.
  SmallRng rng(11);
  Matrix m(3, 4);
  Scalar p = Scalar::var(Var::p), q = Scalar::var(Var::q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      m.at(i, j) = Scalar(rng.small_rational()) + p * Scalar(rng.int_in(-2, 2)) +
                   q * Scalar(rng.int_in(-2, 2));
  RrefResult res = rref(m);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<Var, Rational> at{{Var::p, rng.small_fraction()}, {Var::q, rng.small_fraction()}};
    bool generic = true;
    for (const auto& c : res.conditions)
      if (c.value.substitute(at).is_zero()) generic = false;
    if (!generic) continue;
    Matrix ms = m.substitute(at), rs = res.r.substitute(at);
    // row spaces agree iff stacking does not increase the rank
    CHECK(rank(Matrix::vstack(ms, rs)) == rank(ms));
    CHECK(rank(rs) == rank(ms));
  }
}

TEST_CASE("specialize commutes with solve when conditions stay nonzero") {
  SmallRng rng(23);
  Scalar p = Scalar::var(Var::p), q = Scalar::var(Var::q);
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m.at(i, j) = Scalar(rng.small_rational()) + p * Scalar(rng.int_in(-1, 1)) +
                   q * Scalar(rng.int_in(-1, 1));
  std::vector<Scalar> b{p, q, Scalar(1)};
  auto symbolic = solve_affine(m, b);
  REQUIRE(!is_infeasible(symbolic));
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 10; ++trial) {
    std::map<Var, Rational> at{{Var::p, rng.small_fraction()}, {Var::q, rng.small_fraction()}};
    bool generic = true;
    for (const auto& c : space_of(symbolic).conditions)
      if (c.value.substitute(at).is_zero()) generic = false;
    if (!generic) continue;
    ++checked;
    auto via_space = specialize(space_of(symbolic), at);
    std::vector<Scalar> bs;
    for (const auto& x : b) bs.push_back(x.substitute(at));
    auto direct = solve_affine(m.substitute(at), bs);
    REQUIRE(!is_infeasible(via_space));
    REQUIRE(!is_infeasible(direct));
    CHECK(same_affine_space(space_of(via_space), space_of(direct)));
  }
  CHECK(checked == 10);
}

TEST_CASE("intersection with the full space returns the same set") {
  Matrix m(1, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(1);
  auto a = space_of(solve_affine(m, {Scalar(1)}));
  Matrix zero(1, 2);
  auto full = space_of(solve_affine(zero, {Scalar(0)}));
  auto both = intersect(a, full);
  REQUIRE(!is_infeasible(both));
  CHECK(same_affine_space(space_of(both), a));
}

TEST_CASE("two transversal lines in the plane meet in a point") {
  Matrix m1(1, 2), m2(1, 2);
  m1.at(0, 0) = Scalar(1);
  m1.at(0, 1) = Scalar(1);  // x + y = 2
  m2.at(0, 0) = Scalar(1);
  m2.at(0, 1) = Scalar(-1);  // x - y = 0
  auto a = space_of(solve_affine(m1, {Scalar(2)}));
  auto b = space_of(solve_affine(m2, {Scalar(0)}));
  auto both = intersect(a, b);
  REQUIRE(!is_infeasible(both));
  CHECK(space_of(both).dimension() == 0);
  CHECK(space_of(both).particular == std::vector<Scalar>{Scalar(1), Scalar(1)});
}

TEST_CASE("parallel lines have empty intersection") {
  Matrix m(1, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(1);
  auto a = space_of(solve_affine(m, {Scalar(0)}));
  auto b = space_of(solve_affine(m, {Scalar(1)}));
  CHECK(is_infeasible(intersect(a, b)));
}

TEST_CASE("re-expression with chosen free variables") {
  // x0 + x1 + x2 = 1: dimension 2; choose {x1, x2} free
  Matrix m(1, 3);
  for (int j = 0; j < 3; ++j) m.at(0, j) = Scalar(1);
  auto s = space_of(solve_affine(m, {Scalar(1)}, {"x0", "x1", "x2"}));
  auto re = with_free_variables(s, {"x1", "x2"});
  REQUIRE(re.has_value());
  CHECK(same_affine_space(*re, s));
  // kernel vector for x1 has x1-coordinate 1 and x2-coordinate 0
  CHECK(re->kernel[0][1] == Scalar(1));
  CHECK(re->kernel[0][2] == Scalar(0));
  CHECK(re->kernel[1][1] == Scalar(0));
  CHECK(re->kernel[1][2] == Scalar(1));
  CHECK(re->particular[1].is_zero());
  CHECK(re->particular[2].is_zero());
  // x0 = 1 - x1 - x2
  CHECK(re->particular[0] == Scalar(1));
  CHECK(re->kernel[0][0] == Scalar(-1));
  CHECK(re->kernel[1][0] == Scalar(-1));
}

TEST_CASE("specialize re-solves when a genericity condition vanishes") {
  // p*x = p: generically x = 1 (condition p != 0); at p = 0 the space is the
  // whole line.
  Matrix m(1, 1);
  m.at(0, 0) = Scalar::var(Var::p);
  auto s = space_of(solve_affine(m, {Scalar::var(Var::p)}));
  CHECK(s.dimension() == 0);
  REQUIRE(s.conditions.size() == 1);
  auto at0 = specialize(s, {{Var::p, Rational(0)}});
  REQUIRE(!is_infeasible(at0));
  CHECK(space_of(at0).dimension() == 1);
  auto at2 = specialize(s, {{Var::p, Rational(2)}});
  CHECK(space_of(at2).particular[0] == Scalar(1));
}
