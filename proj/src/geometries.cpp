#include "spinflux/geometries.hpp"

#include <array>
#include <stdexcept>

namespace spinflux {

std::pair<ParametricFormFamily, ParametricFormFamily> su2_families() {
  const int dirs[3] = {1, 2, 7};
  std::vector<std::pair<std::string, ExteriorForm>> tbasis;
  ExteriorForm de[3] = {de1(), de2(), de7()};
  auto dename = [&](int k) { return std::to_string(dirs[k]); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      tbasis.push_back({"t" + dename(i) + dename(j),
                        wedge(ExteriorForm::monomial(7, {dirs[i]}), de[j])});
  tbasis.push_back({"t", ExteriorForm::monomial(7, {1, 2, 7})});

  std::vector<std::pair<std::string, ExteriorForm>> fbasis;
  const std::pair<int, int> pairs[3] = {{1, 2}, {1, 7}, {2, 7}};
  for (const auto& [i, j] : pairs)
    for (int k = 0; k < 3; ++k)
      fbasis.push_back({"f" + std::to_string(i) + std::to_string(j) + dename(k),
                        wedge(ExteriorForm::monomial(7, {i, j}), de[k])});
  fbasis.push_back({"f", ExteriorForm::monomial(7, {3, 4, 5, 6})});
  return {ParametricFormFamily(3, std::move(tbasis)), ParametricFormFamily(4, std::move(fbasis))};
}

KillingSystem sasakian_system(const CliffordRep& rep, const Spinor& psi, const Scalar& p,
                              const Scalar& q) {
  auto [tfam, ffam] = su2_families();
  return assemble(rep, KillingConn{Scalar(1, 2)}, tfam, ffam, p, q, psi);
}

AffineSolutionSpace g2_relation(const CliffordRep& rep, const Spinor& psi) {
  if (rep.n != 7) throw std::invalid_argument("g2_relation needs the 7-dimensional representation");
  ExteriorForm w3 = form_from_spinor(rep, psi);
  ExteriorForm sw3 = hodge(w3, OrientedFrame{7});
  Matrix m(7 * rep.dim, 3);
  std::vector<Scalar> rhs(7 * rep.dim);
  const Scalar quarter(1, 4);
  for (int i = 1; i <= 7; ++i) {
    Spinor col_r = act_form(rep, contract(i, w3), psi) * quarter;
    Spinor col_p = act_form(rep, contract(i, sw3), psi);
    Spinor col_q = act_form(rep, wedge(ExteriorForm::monomial(7, {i}), sw3), psi);
    Spinor inhom = act_vector(rep, i, psi);
    for (int a = 0; a < rep.dim; ++a) {
      int row = (i - 1) * rep.dim + a;
      m.at(row, 0) = col_r.c[a];
      m.at(row, 1) = col_p.c[a];
      m.at(row, 2) = col_q.c[a];
      rhs[row] = -inhom.c[a];
    }
  }
  auto outcome = solve_affine(m, rhs, {"r", "p", "q"});
  if (is_infeasible(outcome)) throw std::logic_error("g2 system unexpectedly infeasible");
  return space_of(outcome);
}

std::pair<ExteriorForm, ExteriorForm> g2_corollary_family(const CliffordRep& rep,
                                                          const Spinor& psi, const Scalar& f,
                                                          const Scalar& p, const Scalar& q) {
  ExteriorForm w3 = form_from_spinor(rep, psi);
  ExteriorForm sw3 = hodge(w3, OrientedFrame{7});
  Scalar torsion_scale =
      (Scalar(12) * q - Scalar(16) * p) * f / Scalar(3) - Scalar(4, 3);
  return {w3 * torsion_scale, sw3 * f};
}

// ---------------------------------------------------------------------------
// Lie algebra models

std::vector<Scalar> LieAlgebraModel::apply_bracket(int i, const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(dim);
  for (int j = 0; j < dim; ++j) {
    if (v[j].is_zero()) continue;
    for (int k = 0; k < dim; ++k) {
      if (bracket[i][j][k].is_zero()) continue;
      out[k] += v[j] * bracket[i][j][k];
    }
  }
  return out;
}

void LieAlgebraModel::verify_antisymmetry_and_jacobi() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (!(bracket[i][j][k] + bracket[j][i][k]).is_zero())
          throw std::logic_error("structure constants not antisymmetric");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        std::vector<Scalar> total(dim);
        for (int l = 0; l < dim; ++l) {
          // [[b_i, b_j], b_k] picked up cyclically
          for (int t = 0; t < dim; ++t) {
            if (!bracket[i][j][l].is_zero())
              total[t] += bracket[i][j][l] * bracket[l][k][t];
            if (!bracket[j][k][l].is_zero())
              total[t] += bracket[j][k][l] * bracket[l][i][t];
            if (!bracket[k][i][l].is_zero())
              total[t] += bracket[k][i][l] * bracket[l][j][t];
          }
        }
        for (const auto& x : total)
          if (!x.is_zero()) throw std::logic_error("Jacobi identity fails");
      }
}

bool LieAlgebraModel::metric_is_biinvariant() const {
  // g([x, y], z) + g(y, [x, z]) = 0 on basis triples
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z) {
        Scalar s(0);
        for (int l = 0; l < dim; ++l) {
          s += bracket[x][y][l] * metric.at(l, z);
          s += bracket[x][z][l] * metric.at(y, l);
        }
        if (!s.is_zero()) return false;
      }
  return true;
}

namespace {

struct CEntry {
  Rational re, im;
};
using CMat3 = std::array<std::array<CEntry, 3>, 3>;

CMat3 cmul(const CMat3& a, const CMat3& b) {
  CMat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational re(0), im(0);
      for (int k = 0; k < 3; ++k) {
        re += a[i][k].re * b[k][j].re - a[i][k].im * b[k][j].im;
        im += a[i][k].re * b[k][j].im + a[i][k].im * b[k][j].re;
      }
      out[i][j] = {re, im};
    }
  return out;
}

CMat3 csub(const CMat3& a, const CMat3& b) {
  CMat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = {a[i][j].re - b[i][j].re, a[i][j].im - b[i][j].im};
  return out;
}

// basis: A12, ~A12, A13, ~A13, A23, ~A23, L = diag(3i,-3i,0), Z = diag(i,i,-2i)
CMat3 su3_basis(int idx) {
  CMat3 m{};
  auto A = [&](int i, int j) {
    m[i][j].re = 1;
    m[j][i].re = -1;
  };
  auto At = [&](int i, int j) {
    m[i][j].im = 1;
    m[j][i].im = 1;
  };
  switch (idx) {
    case 0: A(0, 1); break;
    case 1: At(0, 1); break;
    case 2: A(0, 2); break;
    case 3: At(0, 2); break;
    case 4: A(1, 2); break;
    case 5: At(1, 2); break;
    case 6:
      m[0][0].im = 3;
      m[1][1].im = -3;
      break;
    case 7:
      m[0][0].im = 1;
      m[1][1].im = 1;
      m[2][2].im = -2;
      break;
    default: throw std::out_of_range("su3 basis index");
  }
  return m;
}

std::array<Rational, 8> expand_su3(const CMat3& w) {
  std::array<Rational, 8> c{};
  c[0] = w[0][1].re;
  c[1] = w[0][1].im;
  c[2] = w[0][2].re;
  c[3] = w[0][2].im;
  c[4] = w[1][2].re;
  c[5] = w[1][2].im;
  c[7] = w[2][2].im / Rational(-2);
  c[6] = (w[0][0].im - c[7]) / Rational(3);
  // confirm the expansion reproduces the matrix
  CMat3 rec{};
  for (int i = 0; i < 8; ++i) {
    CMat3 b = su3_basis(i);
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) {
        rec[r][s].re += c[i] * b[r][s].re;
        rec[r][s].im += c[i] * b[r][s].im;
      }
  }
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      if (rec[r][s].re != w[r][s].re || rec[r][s].im != w[r][s].im)
        throw std::logic_error("su(3) expansion failed");
  return c;
}

Rational killing_metric(const CMat3& a, const CMat3& b) {
  // -Re tr(ab)/2
  Rational tr(0);
  CMat3 ab = cmul(a, b);
  for (int i = 0; i < 3; ++i) tr += ab[i][i].re;
  return -tr / 2;
}

}  // namespace

LieAlgebraModel su3_algebra() {
  LieAlgebraModel model;
  model.dim = 8;
  model.bracket.assign(8, std::vector<std::vector<Scalar>>(8, std::vector<Scalar>(8)));
  std::array<CMat3, 8> basis;
  for (int i = 0; i < 8; ++i) basis[i] = su3_basis(i);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      CMat3 br = csub(cmul(basis[i], basis[j]), cmul(basis[j], basis[i]));
      auto coeffs = expand_su3(br);
      for (int k = 0; k < 8; ++k) model.bracket[i][j][k] = Scalar(coeffs[k]);
    }
  model.metric = Matrix(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) model.metric.at(i, j) = Scalar(killing_metric(basis[i], basis[j]));
  model.m_indices = {0, 1, 2, 3, 4, 5, 6};
  model.h_indices = {7};
  model.verify_antisymmetry_and_jacobi();
  return model;
}

LieAlgebraModel su2_algebra() {
  // basis: A = E12 - E21, ~A = i(E12 + E21), H = diag(i, -i)
  // brackets: [A, ~A] = 2H, [~A, H] = 2A, [H, A] = 2~A
  LieAlgebraModel model;
  model.dim = 3;
  model.bracket.assign(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
  auto set = [&](int i, int j, int k, long v) {
    model.bracket[i][j][k] = Scalar(v);
    model.bracket[j][i][k] = Scalar(-v);
  };
  set(0, 1, 2, 2);
  set(1, 2, 0, 2);
  set(2, 0, 1, 2);
  model.metric = Matrix::identity(3);
  model.verify_antisymmetry_and_jacobi();
  return model;
}

// ---------------------------------------------------------------------------
// Aloff-Wallach model

namespace {

// orthonormal frame scales: X_i = rho_i * y^(half_i / 2) * b_i
struct FrameScale {
  Scalar rho;
  int half;  // exponent of sqrt(y)
};

Scalar y_power(int half) {
  if (half % 2 != 0) throw std::logic_error("odd power of sqrt(y) in a rational slot");
  Scalar out(1);
  Scalar yv = Scalar::var(Var::y);
  for (int k = 0; k < half / 2; ++k) out = out * yv;
  for (int k = 0; k < -half / 2; ++k) out = out / yv;
  return out;
}

}  // namespace

AloffWallachModel aw_model(const CliffordRep& rep7, const Scalar& s, const Scalar& y) {
  if (rep7.n != 7) throw std::invalid_argument("aw_model needs the 7-dimensional representation");
  {
    // positivity where the parameters are numeric
    for (const Scalar* v : {&s, &y})
      if (v->is_rational() && v->rational_value() <= 0)
        throw std::invalid_argument("aw_model: parameters must be positive");
  }
  LieAlgebraModel su3 = su3_algebra();
  AloffWallachModel model;
  model.s = s;
  model.y = y;

  const Scalar sy = Scalar::var(Var::y);
  std::array<FrameScale, 7> scale = {FrameScale{Scalar(1), 0}, FrameScale{Scalar(1), 0},
                                     FrameScale{Scalar(1), 1}, FrameScale{Scalar(1), 1},
                                     FrameScale{Scalar(1), 1}, FrameScale{Scalar(1), 1},
                                     FrameScale{s / Scalar(3), 0}};
  // substitute the given parameters into sqrt(y) bookkeeping lazily: the
  // frame uses the symbolic y only through integral powers
  auto combine = [&](const Scalar& c, int i, int j, int k) -> Scalar {
    if (c.is_zero()) return Scalar(0);
    int half = scale[i].half + scale[j].half - scale[k].half;
    Scalar out = c * scale[i].rho * scale[j].rho / scale[k].rho;
    if (half % 2 != 0) throw std::logic_error("frame bracket leaves the rational field");
    Scalar ypow(1);
    for (int t = 0; t < half / 2; ++t) ypow = ypow * y;
    for (int t = 0; t < -(half / 2); ++t) ypow = ypow / y;
    (void)sy;
    return out * ypow;
  };

  model.frame_bracket_m.assign(7, std::vector<std::vector<Scalar>>(7, std::vector<Scalar>(7)));
  model.frame_bracket_h.assign(7, std::vector<Scalar>(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k)
        model.frame_bracket_m[i][j][k] = combine(su3.bracket[i][j][k], i, j, k);
      // h-part: coefficient on Z, scaled by the two frame factors
      Scalar ch = su3.bracket[i][j][7];
      if (!ch.is_zero()) {
        int half = scale[i].half + scale[j].half;
        if (half % 2 != 0) throw std::logic_error("frame bracket leaves the rational field");
        Scalar ypow(1);
        for (int t = 0; t < half / 2; ++t) ypow = ypow * y;
        model.frame_bracket_h[i][j] = ch * scale[i].rho * scale[j].rho * ypow;
      }
    }

  // ad(Z) on m in the frame: blocks share scales, so entries stay rational
  model.isotropy_action = Matrix(7, 7);
  for (int k = 0; k < 7; ++k)
    for (int l = 0; l < 7; ++l) {
      const Scalar& c = su3.bracket[7][k][l];
      if (c.is_zero()) continue;
      if (scale[k].half != scale[l].half)
        throw std::logic_error("isotropy action mixes frame scales");
      model.isotropy_action.at(l, k) = c * scale[k].rho / scale[l].rho;
    }
  model.isotropy_generator = skew_to_two_form(model.isotropy_action, 7);

  // Levi-Civita map: Lambda(X_i)_kj = (c[i][j][k] + c[k][i][j] + c[k][j][i]) / 2
  const auto& c = model.frame_bracket_m;
  model.nomizu.reserve(7);
  for (int i = 0; i < 7; ++i) {
    Matrix lam(7, 7);
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        lam.at(k, j) = (c[i][j][k] + c[k][i][j] + c[k][j][i]) * Scalar(1, 2);
    model.nomizu.push_back(std::move(lam));
  }
  // metric property and torsion-free property, exactly
  for (int i = 0; i < 7; ++i)
    if (!(model.nomizu[i].transposed() == model.nomizu[i].scaled(Scalar(-1))))
      throw std::logic_error("Levi-Civita map is not metric");
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        Scalar lhs = model.nomizu[i].at(k, j) - model.nomizu[j].at(k, i);
        if (!(lhs == c[i][j][k])) throw std::logic_error("Levi-Civita map has torsion");
      }

  model.spin_lift.reserve(7);
  for (int i = 0; i < 7; ++i)
    model.spin_lift.push_back(spin_lift(rep7, skew_to_two_form(model.nomizu[i], 7)));
  return model;
}

std::pair<ParametricFormFamily, ParametricFormFamily> aw_invariant_families() {
  auto mono = [](std::initializer_list<int> idx) {
    return ExteriorForm::monomial(7, IndexTuple(idx));
  };
  std::vector<std::pair<std::string, ExteriorForm>> t3{
      {"alpha3", mono({1, 3, 5}) + mono({1, 4, 6})},
      {"beta3", mono({2, 3, 5}) + mono({2, 4, 6})},
      {"gamma3", mono({3, 5, 7}) + mono({4, 6, 7})},
      {"delta3", mono({1, 4, 5}) - mono({1, 3, 6})},
      {"eps3", mono({2, 4, 5}) - mono({2, 3, 6})},
      {"xi3", mono({4, 5, 7}) - mono({3, 6, 7})},
      {"mu3", mono({1, 2, 7})},
      {"nu3", mono({3, 4, 7})},
      {"lambda3", mono({5, 6, 7})},
      {"eta3", mono({1, 3, 4})},
      {"omega3", mono({2, 3, 4})},
      {"pi3", mono({1, 5, 6})},
      {"rho3", mono({2, 5, 6})},
  };
  std::vector<std::pair<std::string, ExteriorForm>> f4{
      {"alpha4", mono({1, 2, 3, 4})},
      {"beta4", mono({1, 2, 5, 6})},
      {"gamma4", mono({3, 4, 5, 6})},
      {"delta4", mono({1, 3, 4, 7})},
      {"eps4", mono({1, 5, 6, 7})},
      {"xi4", mono({2, 3, 4, 7})},
      {"mu4", mono({2, 5, 6, 7})},
      {"nu4", mono({1, 2, 3, 5}) + mono({1, 2, 4, 6})},
      {"lambda4", mono({1, 3, 5, 7}) + mono({1, 4, 6, 7})},
      {"eta4", mono({1, 2, 4, 5}) - mono({1, 2, 3, 6})},
      {"omega4", mono({1, 4, 5, 7}) - mono({1, 3, 6, 7})},
      {"pi4", mono({2, 4, 5, 7}) - mono({2, 3, 6, 7})},
      {"rho4", mono({2, 3, 5, 7}) + mono({2, 4, 6, 7})},
  };
  return {ParametricFormFamily(3, std::move(t3)), ParametricFormFamily(4, std::move(f4))};
}

int isotropy_invariant_dimension(int k) {
  ExteriorForm gen(7, 2);
  gen.add_term({3, 4}, Scalar(1));
  gen.add_term({5, 6}, Scalar(1));
  auto tuples = increasing_tuples(7, k);
  std::map<IndexTuple, int> slot;
  for (const auto& t : tuples) slot.emplace(t, int(slot.size()));
  Matrix op(int(tuples.size()), int(tuples.size()));
  for (std::size_t j = 0; j < tuples.size(); ++j) {
    ExteriorForm image = rotate_form(gen, ExteriorForm::monomial(7, tuples[j]));
    for (const auto& [idx, coef] : image.terms()) op.at(slot[idx], int(j)) = coef;
  }
  return int(kernel_basis(op).size());
}

std::pair<Matrix, Scalar> aw_curvature(const AloffWallachModel& model) {
  const auto& lam = model.nomizu;
  const auto& c = model.frame_bracket_m;
  Matrix ricci(7, 7);
  // R(X_i, X_a) = [Lam_i, Lam_a] - Lam([X_i, X_a]_m) - ad([X_i, X_a]_h)
  for (int i = 0; i < 7; ++i)
    for (int a = 0; a < 7; ++a) {
      Matrix r = lam[i] * lam[a] - lam[a] * lam[i];
      for (int k = 0; k < 7; ++k) {
        if (c[i][a][k].is_zero()) continue;
        r = r - lam[k].scaled(c[i][a][k]);
      }
      if (!model.frame_bracket_h[i][a].is_zero())
        r = r - model.isotropy_action.scaled(model.frame_bracket_h[i][a]);
      for (int b = 0; b < 7; ++b) ricci.at(a, b) += r.at(i, b);
    }
  Scalar scal(0);
  for (int a = 0; a < 7; ++a) scal += ricci.at(a, a);
  return {std::move(ricci), std::move(scal)};
}

std::pair<ParametricFormFamily, ParametricFormFamily> dim8_families() {
  std::vector<std::pair<std::string, ExteriorForm>> t3, f4;
  for (const auto& idx : increasing_tuples(8, 3)) {
    std::string name = "t";
    for (int i : idx) name += std::to_string(i);
    t3.push_back({name, ExteriorForm::monomial(8, idx)});
  }
  for (const auto& idx : increasing_tuples(8, 4)) {
    std::string name = "f";
    for (int i : idx) name += std::to_string(i);
    f4.push_back({name, ExteriorForm::monomial(8, idx)});
  }
  return {ParametricFormFamily(3, std::move(t3)), ParametricFormFamily(4, std::move(f4))};
}

ExteriorForm lie_group_torsion(const LieAlgebraModel& model) {
  if (!model.metric_is_biinvariant())
    throw std::invalid_argument("lie_group_torsion: metric is not biinvariant");
  const int n = model.dim;
  auto value = [&](int i, int j, int k) {
    Scalar v(0);
    for (int l = 0; l < n; ++l) {
      if (model.bracket[i][j][l].is_zero()) continue;
      v += model.bracket[i][j][l] * model.metric.at(l, k);
    }
    return -v;
  };
  ExteriorForm t0(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) t0.add_term({i + 1, j + 1, k + 1}, value(i, j, k));
  // total skew-symmetry: recomputing in any argument order must agree
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        IndexTuple idx{i + 1, j + 1, k + 1};
        int sign = sort_index_tuple(idx);
        Scalar expect = sign == 0 ? Scalar(0) : t0.coefficient(idx) * Scalar(sign);
        if (!(value(i, j, k) == expect))
          throw std::logic_error("canonical torsion is not totally skew");
      }
  return t0;
}

std::pair<ExteriorForm, ExteriorForm> su3_orthonormal_torsion_split() {
  LieAlgebraModel su3 = su3_algebra();
  // u_i = b_i / theta_i with theta = (1,1,1,1,1,1,3,sqrt 3)
  std::array<Scalar, 8> theta = {Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                                 Scalar(1), Scalar(1), Scalar(3), Scalar(1)};  // theta_8 via sqrt 3
  auto bval = [&](int i, int j, int k) {
    Scalar v(0);
    for (int l = 0; l < 8; ++l) {
      if (su3.bracket[i][j][l].is_zero()) continue;
      v += su3.bracket[i][j][l] * su3.metric.at(l, k);
    }
    return -v;
  };
  ExteriorForm p(8, 3), q(8, 3);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      for (int k = j + 1; k < 7; ++k)
        p.add_term({i + 1, j + 1, k + 1}, bval(i, j, k) / (theta[i] * theta[j] * theta[k]));
      // index-8 slice: T0(u_i, u_j, u_8) = (coefficient) * sqrt(3)
      Scalar coeff = bval(i, j, 7) / (theta[i] * theta[j] * Scalar(3));
      q.add_term({i + 1, j + 1, 8}, coeff);
    }
  return {std::move(p), std::move(q)};
}

}  // namespace spinflux
