#include "spinflux/clifford.hpp"

#include <array>
#include <stdexcept>

namespace spinflux {

bool Spinor::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

Spinor Spinor::operator+(const Spinor& o) const {
  Spinor out(*this);
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
  return out;
}

Spinor Spinor::operator-(const Spinor& o) const {
  Spinor out(*this);
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] -= o.c[i];
  return out;
}

Spinor Spinor::operator*(const Scalar& k) const {
  Spinor out(*this);
  for (auto& x : out.c) x *= k;
  return out;
}

Spinor spinor_from(const std::vector<Scalar>& coeffs) { return Spinor{coeffs}; }

const Matrix& CliffordRep::generator(int i) const {
  if (i < 1 || i > n) throw std::out_of_range("frame index out of range");
  return gen[i - 1];
}

namespace {

// 2x2 building blocks: I (symmetric), A (skew, A^2=-1), B, C (symmetric,
// square +1). Kronecker products with an odd number of A factors are skew
// with square -1.
enum Block { BI = 0, BA, BB, BC };

Matrix block_matrix(Block b) {
  Matrix m(2, 2);
  switch (b) {
    case BI: m.at(0, 0) = Scalar(1); m.at(1, 1) = Scalar(1); break;
    case BA: m.at(0, 1) = Scalar(-1); m.at(1, 0) = Scalar(1); break;
    case BB: m.at(0, 0) = Scalar(1); m.at(1, 1) = Scalar(-1); break;
    case BC: m.at(0, 1) = Scalar(1); m.at(1, 0) = Scalar(1); break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

bool blocks_anticommute(const std::array<Block, 3>& x, const std::array<Block, 3>& y) {
  int flips = 0;
  for (int t = 0; t < 3; ++t) {
    bool bothc = x[t] != BI && y[t] != BI && x[t] != y[t];
    if (bothc) ++flips;
  }
  return flips % 2 == 1;
}

std::vector<std::array<Block, 3>> find_generator_triples() {
  std::vector<std::array<Block, 3>> candidates;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        int acount = (a == BA) + (b == BA) + (c == BA);
        if (acount % 2 == 1)
          candidates.push_back({Block(a), Block(b), Block(c)});
      }
  std::vector<std::array<Block, 3>> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == 7) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen)
        if (!blocks_anticommute(candidates[i], c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(candidates[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0)) throw std::logic_error("no Clifford generator set found");
  return chosen;
}

Matrix offdiag(const Matrix& x, const Matrix& y) {
  // [[0, x], [y, 0]]
  const int m = x.rows();
  Matrix out(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      out.at(i, m + j) = x.at(i, j);
      out.at(m + i, j) = y.at(i, j);
    }
  return out;
}

}  // namespace

CliffordRep build_rep(int n) {
  if (n != 7 && n != 8) throw std::invalid_argument("build_rep: n must be 7 or 8");
  CliffordRep rep7;
  rep7.n = 7;
  rep7.dim = 8;
  for (const auto& t : find_generator_triples())
    rep7.gen.push_back(kron(kron(block_matrix(t[0]), block_matrix(t[1])), block_matrix(t[2])));
  if (n == 7) {
    verify_rep(rep7);
    return rep7;
  }
  CliffordRep rep8;
  rep8.n = 8;
  rep8.dim = 16;
  for (const auto& e : rep7.gen) rep8.gen.push_back(offdiag(e, e));
  Matrix id8 = Matrix::identity(8);
  rep8.gen.push_back(offdiag(id8.scaled(Scalar(-1)), id8));
  Matrix vol = rep8.gen[0];
  for (int i = 1; i < 8; ++i) vol = vol * rep8.gen[i];
  rep8.chirality = vol;
  verify_rep(rep8);
  return rep8;
}

void verify_rep(const CliffordRep& rep) {
  Matrix id = Matrix::identity(rep.dim);
  for (int i = 0; i < rep.n; ++i)
    for (int j = i; j < rep.n; ++j) {
      Matrix s = rep.gen[i] * rep.gen[j] + rep.gen[j] * rep.gen[i];
      Matrix expect = (i == j) ? id.scaled(Scalar(-2)) : Matrix(rep.dim, rep.dim);
      if (!(s == expect)) throw std::logic_error("Clifford relation violated");
    }
  for (int i = 0; i < rep.n; ++i)
    if (!(rep.gen[i].transposed() == rep.gen[i].scaled(Scalar(-1))))
      throw std::logic_error("generator not skew-adjoint");
  if (rep.n == 8) {
    if (!(rep.chirality * rep.chirality == id))
      throw std::logic_error("chirality does not square to identity");
    for (int i = 0; i < 8; ++i) {
      Matrix s = rep.chirality * rep.gen[i] + rep.gen[i] * rep.chirality;
      if (!s.is_zero()) throw std::logic_error("chirality does not anticommute");
    }
    // trace 0 <=> two 8-dimensional eigenspaces
    Scalar tr(0);
    for (int i = 0; i < 16; ++i) tr += rep.chirality.at(i, i);
    if (!tr.is_zero()) throw std::logic_error("chirality eigenspaces are not 8+8");
  }
}

Scalar inner(const Spinor& a, const Spinor& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("spinor size mismatch");
  Scalar out(0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out += a.c[i] * b.c[i];
  return out;
}

Spinor act_vector(const CliffordRep& rep, int i, const Spinor& psi) {
  return Spinor{rep.generator(i).apply(psi.c)};
}

Matrix form_action(const CliffordRep& rep, const ExteriorForm& w) {
  if (w.ambient() != rep.n) throw std::invalid_argument("form/rep dimension mismatch");
  Matrix out(rep.dim, rep.dim);
  for (const auto& [idx, coef] : w.terms()) {
    Matrix prod = Matrix::identity(rep.dim);
    for (int i : idx) prod = prod * rep.generator(i);
    out = out + prod.scaled(coef);
  }
  return out;
}

Spinor act_form(const CliffordRep& rep, const ExteriorForm& w, const Spinor& psi) {
  if (w.ambient() != rep.n) throw std::invalid_argument("form/rep dimension mismatch");
  Spinor out{std::vector<Scalar>(rep.dim)};
  for (const auto& [idx, coef] : w.terms()) {
    Spinor cur = psi;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) cur = act_vector(rep, *it, cur);
    out = out + cur * coef;
  }
  return out;
}

ExteriorForm form_from_spinor(const CliffordRep& rep, const Spinor& psi) {
  if (rep.n != 7) throw std::invalid_argument("form_from_spinor needs the 7-dimensional representation");
  if (psi.is_zero()) throw std::invalid_argument("zero spinor");
  Scalar nrm = inner(psi, psi);
  ExteriorForm w(7, 3);
  for (const auto& idx : increasing_tuples(7, 3)) {
    Spinor cur = psi;
    cur = act_vector(rep, idx[2], cur);
    cur = act_vector(rep, idx[1], cur);
    cur = act_vector(rep, idx[0], cur);
    Scalar coef = -(inner(cur, psi) / nrm);
    if (!coef.is_zero()) w.add_term(idx, coef);
  }
  return w;
}

Matrix spin_lift(const CliffordRep& rep, const ExteriorForm& two_form) {
  if (two_form.degree() != 2) throw std::invalid_argument("spin_lift needs a 2-form");
  Matrix out(rep.dim, rep.dim);
  Scalar half(1, 2);
  for (const auto& [idx, coef] : two_form.terms())
    out = out + (rep.generator(idx[0]) * rep.generator(idx[1])).scaled(coef * half);
  return out;
}

std::vector<Spinor> invariant_spinors(const CliffordRep& rep,
                                      const std::vector<ExteriorForm>& generators) {
  if (generators.empty()) {
    std::vector<Spinor> basis;
    for (int i = 0; i < rep.dim; ++i) {
      std::vector<Scalar> v(rep.dim);
      v[i] = Scalar(1);
      basis.push_back(Spinor{std::move(v)});
    }
    return basis;
  }
  Matrix stacked(int(generators.size()) * rep.dim, rep.dim);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Matrix lift = spin_lift(rep, generators[g]);
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j) stacked.at(int(g) * rep.dim + i, j) = lift.at(i, j);
  }
  std::vector<Spinor> out;
  for (auto& v : kernel_basis(stacked)) out.push_back(Spinor{std::move(v)});
  return out;
}

Matrix two_form_to_skew(const ExteriorForm& two_form) {
  const int n = two_form.ambient();
  Matrix m(n, n);
  for (const auto& [idx, c] : two_form.terms()) {
    m.at(idx[1] - 1, idx[0] - 1) += c;
    m.at(idx[0] - 1, idx[1] - 1) -= c;
  }
  return m;
}

ExteriorForm skew_to_two_form(const Matrix& skew, int n) {
  ExteriorForm w(n, 2);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const Scalar& c = skew.at(k, j);
      if (!c.is_zero()) w.add_term({j + 1, k + 1}, c);
    }
  return w;
}

std::vector<ExteriorForm> su2_generators() {
  ExteriorForm g1(7, 2), g2(7, 2), g3(7, 2);
  g1.add_term({3, 4}, Scalar(1));
  g1.add_term({5, 6}, Scalar(1));
  g2.add_term({3, 5}, Scalar(1));
  g2.add_term({4, 6}, Scalar(-1));
  g3.add_term({3, 6}, Scalar(1));
  g3.add_term({4, 5}, Scalar(1));
  return {g1, g2, g3};
}

}  // namespace spinflux
