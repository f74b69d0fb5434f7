#include <doctest.h>

#include "spinflux/forms.hpp"
#include "spinflux/rng.hpp"

using namespace spinflux;

namespace {

ExteriorForm random_form(SmallRng& rng, int n, int k, int nterms = 3) {
  ExteriorForm f(n, k);
  auto tuples = increasing_tuples(n, k);
  for (int t = 0; t < nterms; ++t)
    f.add_term(tuples[rng.below(int(tuples.size()))], Scalar(rng.small_rational()));
  return f;
}

ExteriorForm e(std::initializer_list<int> idx, int n = 7) {
  return ExteriorForm::monomial(n, IndexTuple(idx));
}

}  // namespace

TEST_CASE("wedge on monomials") {
  CHECK(wedge(e({1}), e({2})) == e({1, 2}));
  CHECK(wedge(e({1}), e({1})).is_zero());
  CHECK(wedge(e({2}), e({1})) == e({1, 2}) * Scalar(-1));
  ExteriorForm expect = e({1, 3, 5}) + e({1, 4, 6});
  CHECK(wedge(e({1}), de1()) == expect);
}

TEST_CASE("interior product on monomials") {
  CHECK(contract(1, e({1, 2})) == e({2}));
  CHECK(contract(2, e({1, 3, 5})).is_zero());
  CHECK(contract(3, de1()) == e({5}));
  CHECK(contract(2, e({1, 2})) == e({1}) * Scalar(-1));
}

TEST_CASE("wedge is associative and graded-commutative") {
  SmallRng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int ka = rng.int_in(1, 2), kb = rng.int_in(1, 2), kc = rng.int_in(1, 3);
    ExteriorForm a = random_form(rng, 7, ka);
    ExteriorForm b = random_form(rng, 7, kb);
    ExteriorForm c = random_form(rng, 7, kc);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    int sign = (ka * kb) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == wedge(b, a) * Scalar(sign));
  }
}

TEST_CASE("contraction is an antiderivation") {
  SmallRng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int ka = rng.int_in(1, 3), kb = rng.int_in(1, 3);
    ExteriorForm a = random_form(rng, 7, ka);
    ExteriorForm b = random_form(rng, 7, kb);
    int x = rng.int_in(1, 7);
    ExteriorForm lhs = contract(x, wedge(a, b));
    ExteriorForm rhs = wedge(contract(x, a), b) +
                       wedge(a, contract(x, b)) * Scalar(ka % 2 == 0 ? 1 : -1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contraction and wedge with a frame vector are adjoint-split") {
  // e_i . (e_i ^ w) + e_i ^ (e_i . w) = w for unit frame vectors
  SmallRng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    ExteriorForm w = random_form(rng, 7, rng.int_in(1, 3));
    int i = rng.int_in(1, 7);
    ExteriorForm lhs = contract(i, wedge(e({i}), w)) + wedge(e({i}), contract(i, w));
    CHECK(lhs == w);
  }
}

TEST_CASE("hodge star basics in dimension 7") {
  OrientedFrame frame{7};
  ExteriorForm one(7, 0);
  one.add_term({}, Scalar(1));
  CHECK(hodge(one, frame) == e({1, 2, 3, 4, 5, 6, 7}));
  // *(e3456) = s * e127 with sign fixed by e3456 ^ (s e127) = vol
  ExteriorForm h = hodge(e({3, 4, 5, 6}), frame);
  REQUIRE(h.terms().size() == 1);
  IndexTuple idx = h.terms().begin()->first;
  CHECK(idx == IndexTuple{1, 2, 7});
  Scalar sign = h.terms().begin()->second;
  ExteriorForm check = wedge(e({3, 4, 5, 6}), e({1, 2, 7}) * sign);
  CHECK(check == e({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("double hodge is the identity on 3-forms in dimension 7") {
  SmallRng rng(31);
  OrientedFrame frame{7};
  for (int trial = 0; trial < 20; ++trial) {
    ExteriorForm w = random_form(rng, 7, 3, 4);
    CHECK(hodge(hodge(w, frame), frame) == w);
  }
}

TEST_CASE("alpha ^ *beta = <alpha, beta> vol for equal degrees") {
  SmallRng rng(41);
  OrientedFrame frame{7};
  ExteriorForm vol = e({1, 2, 3, 4, 5, 6, 7});
  for (int trial = 0; trial < 30; ++trial) {
    int k = rng.int_in(1, 4);
    ExteriorForm a = random_form(rng, 7, k);
    ExteriorForm b = random_form(rng, 7, k);
    Scalar ip(0);
    for (const auto& [idx, c] : a.terms()) ip += c * b.coefficient(idx);
    CHECK(wedge(a, hodge(b, frame)) == vol * ip);
  }
}

TEST_CASE("norm_sq examples") {
  CHECK(norm_sq(e({1, 2, 7})) == Scalar(1));
  CHECK(norm_sq(de1()) == Scalar(2));
  CHECK(norm_sq(de2()) == Scalar(2));
  CHECK(norm_sq(de7()) == Scalar(2));
}

TEST_CASE("rotation action: de-forms are invariant under the su(2) triple") {
  // each de_i is anti-self-dual while the annihilating triple is self-dual;
  // the two so(4) factors commute, so the de-forms must be fixed.
  ExteriorForm g1(7, 2), g2(7, 2), g3(7, 2);
  g1.add_term({3, 4}, Scalar(1));
  g1.add_term({5, 6}, Scalar(1));
  g2.add_term({3, 5}, Scalar(1));
  g2.add_term({4, 6}, Scalar(-1));
  g3.add_term({3, 6}, Scalar(1));
  g3.add_term({4, 5}, Scalar(1));
  for (const auto& g : {g1, g2, g3}) {
    CHECK(rotate_form(g, de1()).is_zero());
    CHECK(rotate_form(g, de2()).is_zero());
    CHECK(rotate_form(g, de7()).is_zero());
  }
  // but they rotate each other inside their own triple
  CHECK(!rotate_form(de1(), de2()).is_zero());
}

TEST_CASE("hodge in dimension 8") {
  OrientedFrame frame{8};
  ExteriorForm w = e({1, 2, 3, 4}, 8);
  CHECK(hodge(w, frame) == e({5, 6, 7, 8}, 8));
  CHECK(hodge(hodge(w, frame), frame) == w);
}
