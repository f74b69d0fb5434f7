#include "spinflux/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <chrono>

namespace spinflux {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols_ == o.rows_);
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  assert(int(v.size()) == cols_);
  std::vector<Scalar> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

Matrix Matrix::substitute(const std::map<Var, Rational>& assignment) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].substitute(assignment);
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  assert(top.cols() == bottom.cols());
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

namespace {

bool is_special_locus(const Polynomial& num) {
  static const Polynomial k4p3q = Polynomial::parse("4*p - 3*q");
  static const Polynomial kpq = Polynomial::parse("p - q");
  Polynomial n = num;
  n.make_primitive();
  return n == k4p3q || n == kpq;
}

void record_pivot(const Scalar& pivot, int row, int col,
                  std::vector<GenericityCondition>* conditions) {
  if (pivot.is_rational() || conditions == nullptr) return;
  Polynomial num = pivot.numerator_copy();
  if (num.is_constant()) return;
  num.make_primitive();
  Scalar value(num);
  for (const auto& c : *conditions)
    if (c.value == value) return;
  conditions->push_back({value,
                         "pivot at row " + std::to_string(row) + ", column " + std::to_string(col),
                         is_special_locus(num)});
}

// Pivot preference: constant entries beat parameter-dependent ones; among
// constants prefer sparse rows (less fill-in), then lower row index.
int pick_pivot_row(const Matrix& m, int col, int start_row) {
  int best = -1;
  long best_key = 0;
  for (int r = start_row; r < m.rows(); ++r) {
    const Scalar& v = m.at(r, col);
    if (v.is_zero()) continue;
    long key;
    if (v.is_rational()) {
      key = 0;
      for (int j = col; j < m.cols(); ++j)
        if (!m.at(r, j).is_zero()) ++key;
    } else {
      key = 1000000 + long(v.numerator_poly().terms().size()) +
            long(v.denominator_poly().terms().size());
    }
    if (best < 0 || key < best_key) {
      best = r;
      best_key = key;
    }
  }
  return best;
}

}  // namespace

namespace {

// Scales a row of plain rationals to integer entries with content 1
// (fraction-free elimination keeps intermediate growth under control).
void make_row_primitive(Matrix& r, int row, int from_col) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (int j = from_col; j < r.cols(); ++j) {
    const Scalar& v = r.at(row, j);
    if (v.is_zero()) continue;
    const Rational& q = v.rational_value();
    mpz_class n = q.get_num(), d = q.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (num_gcd == 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return;
  Scalar s(scale);
  for (int j = from_col; j < r.cols(); ++j)
    if (!r.at(row, j).is_zero()) r.at(row, j) *= s;
}

// RREF with pivot search restricted to the first `pivot_col_limit` columns
// (used to carry an augmented column along without pivoting on it).
// Forward elimination below the pivot first, then a backward reduction pass;
// matrices of plain rationals run fraction-free with content removal.
RrefResult rref_limited(const Matrix& m, int pivot_col_limit) {
  const bool prof = [] { const char* e = std::getenv("SPINFLUX_PROF"); return e && *e == '1'; }();
  auto prof_t0 = std::chrono::steady_clock::now();
  auto prof_mark = [&](const char* what) {
    if (!prof) return;
    auto now = std::chrono::steady_clock::now();
    std::fprintf(stderr, "[prof] %s: %ld ms\n", what,
                 (long)std::chrono::duration_cast<std::chrono::milliseconds>(now - prof_t0).count());
    prof_t0 = now;
  };
  RrefResult res;
  res.r = m;
  Matrix& r = res.r;
  bool integer_mode = true;
  for (int i = 0; i < r.rows() && integer_mode; ++i)
    for (int j = 0; j < r.cols() && integer_mode; ++j)
      if (!r.at(i, j).is_rational()) integer_mode = false;
  if (integer_mode)
    for (int i = 0; i < r.rows(); ++i) make_row_primitive(r, i, 0);

  int lead = 0;
  for (int col = 0; col < pivot_col_limit && lead < r.rows(); ++col) {
    int prow = pick_pivot_row(r, col, lead);
    if (prow < 0) continue;
    if (prow != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(prow, j), r.at(lead, j));
    Scalar pivot = r.at(lead, col);
    record_pivot(pivot, lead, col, &res.conditions);
    if (integer_mode) {
      // row_i <- pivot * row_i - a * row_lead, then strip the content
      for (int i = lead + 1; i < r.rows(); ++i) {
        const Scalar a = r.at(i, col);
        if (a.is_zero()) continue;
        r.at(i, col) = Scalar(0);
        for (int j = col + 1; j < r.cols(); ++j) {
          if (!r.at(i, j).is_zero()) r.at(i, j) *= pivot;
          if (!r.at(lead, j).is_zero()) r.at(i, j).submul(a, r.at(lead, j));
        }
        make_row_primitive(r, i, col + 1);
      }
    } else {
      if (!pivot.is_one()) {
        Scalar inv = Scalar(1) / pivot;
        for (int j = col; j < r.cols(); ++j)
          if (!r.at(lead, j).is_zero()) r.at(lead, j) *= inv;
      }
      for (int i = lead + 1; i < r.rows(); ++i) {
        const Scalar factor = r.at(i, col);
        if (factor.is_zero()) continue;
        r.at(i, col) = Scalar(0);
        for (int j = col + 1; j < r.cols(); ++j) {
          if (r.at(lead, j).is_zero()) continue;
          r.at(i, j).submul(factor, r.at(lead, j));
        }
      }
    }
    res.pivot_columns.push_back(col);
    ++lead;
  }
  prof_mark("forward");
  if (integer_mode) {
    // normalize the pivots to 1 before the backward pass
    for (int pi = 0; pi < int(res.pivot_columns.size()); ++pi) {
      const Scalar pivot = r.at(pi, res.pivot_columns[pi]);
      if (pivot.is_one()) continue;
      Scalar inv = Scalar(1) / pivot;
      for (int j = res.pivot_columns[pi]; j < r.cols(); ++j)
        if (!r.at(pi, j).is_zero()) r.at(pi, j) *= inv;
    }
  }
  prof_mark("pivot-normalize");
  for (int pi = int(res.pivot_columns.size()) - 1; pi >= 0; --pi) {
    const int col = res.pivot_columns[pi];
    for (int i = 0; i < pi; ++i) {
      const Scalar factor = r.at(i, col);
      if (factor.is_zero()) continue;
      r.at(i, col) = Scalar(0);
      for (int j = col + 1; j < r.cols(); ++j) {
        if (r.at(pi, j).is_zero()) continue;
        r.at(i, j).submul(factor, r.at(pi, j));
      }
    }
  }
  prof_mark("backward");
  return res;
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_limited(m, m.cols()); }

int rank(const Matrix& m) { return rref(m).rank(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  RrefResult res = rref_limited(aug, n);
  if (res.rank() != n) throw std::invalid_argument("inverse: singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = res.r.at(i, n + j);
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m,
                                              std::vector<GenericityCondition>* conditions) {
  RrefResult res = rref(m);
  if (conditions)
    for (auto& c : res.conditions) conditions->push_back(c);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : res.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(m.cols());
    v[j] = Scalar(1);
    for (std::size_t pi = 0; pi < res.pivot_columns.size(); ++pi)
      v[res.pivot_columns[pi]] = -res.r.at(int(pi), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> AffineSolutionSpace::member(const std::vector<Scalar>& coeffs) const {
  assert(coeffs.size() == kernel.size());
  std::vector<Scalar> x = particular;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += coeffs[i] * kernel[i][j];
  }
  return x;
}

int AffineSolutionSpace::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return int(i);
  throw std::invalid_argument("unknown variable label '" + label + "'");
}

SolveOutcome solve_affine(const Matrix& m, const std::vector<Scalar>& b,
                          std::vector<std::string> labels) {
  assert(int(b.size()) == m.rows());
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult res = rref_limited(aug, m.cols());

  // Inconsistency: a row whose coefficient part vanished with a nonzero
  // right-hand side. The residual is the obstruction.
  std::vector<Scalar> obstructions;
  for (int i = res.rank(); i < m.rows(); ++i)
    if (!res.r.at(i, m.cols()).is_zero()) obstructions.push_back(res.r.at(i, m.cols()));
  if (!obstructions.empty()) return Infeasible{std::move(obstructions)};

  AffineSolutionSpace space;
  if (labels.empty()) {
    labels.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) labels.push_back("x" + std::to_string(j));
  }
  if (int(labels.size()) != m.cols()) throw std::invalid_argument("label count mismatch");
  space.labels = std::move(labels);
  space.conditions = std::move(res.conditions);

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : res.pivot_columns) is_pivot[c] = true;
  space.particular.assign(m.cols(), Scalar(0));
  for (std::size_t pi = 0; pi < res.pivot_columns.size(); ++pi)
    space.particular[res.pivot_columns[pi]] = res.r.at(int(pi), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(m.cols());
    v[j] = Scalar(1);
    for (std::size_t pi = 0; pi < res.pivot_columns.size(); ++pi)
      v[res.pivot_columns[pi]] = -res.r.at(int(pi), j);
    space.kernel.push_back(std::move(v));
  }
  space.set_system(m, b);
  return space;
}

SolveOutcome specialize(const AffineSolutionSpace& space, const std::map<Var, Rational>& assignment) {
  bool degenerate = false;
  for (const auto& c : space.conditions) {
    Scalar v = c.value.substitute(assignment);
    if (v.is_zero()) {
      degenerate = true;
      break;
    }
  }
  if (degenerate) {
    if (space.system_matrix().rows() == 0)
      throw std::logic_error("cannot re-solve: no originating system stored");
    Matrix m = space.system_matrix().substitute(assignment);
    std::vector<Scalar> b;
    b.reserve(space.system_rhs().size());
    for (const auto& x : space.system_rhs()) b.push_back(x.substitute(assignment));
    return solve_affine(m, b, space.labels);
  }
  AffineSolutionSpace out;
  out.labels = space.labels;
  out.particular.reserve(space.particular.size());
  for (const auto& x : space.particular) out.particular.push_back(x.substitute(assignment));
  for (const auto& k : space.kernel) {
    std::vector<Scalar> v;
    v.reserve(k.size());
    for (const auto& x : k) v.push_back(x.substitute(assignment));
    out.kernel.push_back(std::move(v));
  }
  for (const auto& c : space.conditions) {
    Scalar v = c.value.substitute(assignment);
    if (!v.is_rational()) out.conditions.push_back({v, c.source, c.special_locus});
  }
  if (space.system_matrix().rows() > 0) {
    Matrix m = space.system_matrix().substitute(assignment);
    std::vector<Scalar> b;
    for (const auto& x : space.system_rhs()) b.push_back(x.substitute(assignment));
    out.set_system(std::move(m), std::move(b));
  }
  return out;
}

std::pair<Matrix, std::vector<Scalar>> implicit_system(const AffineSolutionSpace& space) {
  if (space.system_matrix().rows() > 0)
    return {space.system_matrix(), space.system_rhs()};
  const int n = int(space.labels.size());
  Matrix kt(int(space.kernel.size()), n);
  for (std::size_t i = 0; i < space.kernel.size(); ++i)
    for (int j = 0; j < n; ++j) kt.at(int(i), j) = space.kernel[i][j];
  auto left = kernel_basis(kt);  // kernel of K^T = left annihilator of K
  Matrix m(int(left.size()), n);
  for (std::size_t i = 0; i < left.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(int(i), j) = left[i][j];
  std::vector<Scalar> b = m.apply(space.particular);
  return {std::move(m), std::move(b)};
}

SolveOutcome intersect(const AffineSolutionSpace& a, const AffineSolutionSpace& b) {
  if (a.labels != b.labels) throw std::invalid_argument("intersect: variable labels differ");
  auto [ma, ba] = implicit_system(a);
  auto [mb, bb] = implicit_system(b);
  Matrix m = Matrix::vstack(ma, mb);
  std::vector<Scalar> rhs = ba;
  rhs.insert(rhs.end(), bb.begin(), bb.end());
  return solve_affine(m, rhs, a.labels);
}

bool same_affine_space(const AffineSolutionSpace& a, const AffineSolutionSpace& b) {
  if (a.dimension() != b.dimension()) return false;
  auto contains = [](const AffineSolutionSpace& outer, const AffineSolutionSpace& inner) {
    auto [m, rhs] = implicit_system(outer);
    std::vector<Scalar> at_particular = m.apply(inner.particular);
    for (std::size_t i = 0; i < rhs.size(); ++i)
      if (!(at_particular[i] == rhs[i])) return false;
    for (const auto& k : inner.kernel) {
      std::vector<Scalar> mk = m.apply(k);
      for (const auto& v : mk)
        if (!v.is_zero()) return false;
    }
    return true;
  };
  return contains(a, b) && contains(b, a);
}

std::optional<AffineSolutionSpace> with_free_variables(const AffineSolutionSpace& space,
                                                       const std::vector<std::string>& free_labels) {
  const int d = space.dimension();
  if (int(free_labels.size()) != d) return std::nullopt;
  std::vector<int> idx;
  idx.reserve(d);
  for (const auto& l : free_labels) idx.push_back(space.label_index(l));

  // P maps kernel coordinates to the chosen free coordinates; invert it.
  Matrix p(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) p.at(j, i) = space.kernel[i][idx[j]];
  Matrix aug(d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      aug.at(i, j) = p.at(i, j);
      aug.at(i, d + j) = (i == j) ? Scalar(1) : Scalar(0);
    }
  RrefResult res = rref(aug);
  for (int i = 0; i < d; ++i)
    if (int(res.pivot_columns.size()) <= i || res.pivot_columns[i] != i) return std::nullopt;

  AffineSolutionSpace out;
  out.labels = space.labels;
  out.conditions = space.conditions;
  for (const auto& c : res.conditions) out.conditions.push_back(c);
  const int n = int(space.labels.size());
  // new kernel vector j = sum_i (P^{-1})_{ij} * kernel_i
  out.kernel.assign(d, std::vector<Scalar>(n));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const Scalar& pij = res.r.at(i, d + j);
      if (pij.is_zero()) continue;
      for (int t = 0; t < n; ++t) out.kernel[j][t] += pij * space.kernel[i][t];
    }
  out.particular = space.particular;
  for (int j = 0; j < d; ++j) {
    const Scalar u = space.particular[idx[j]];
    if (u.is_zero()) continue;
    for (int t = 0; t < n; ++t) out.particular[t] -= u * out.kernel[j][t];
  }
  out.set_system(space.system_matrix(), space.system_rhs());
  return out;
}

std::vector<Scalar> evaluate_on_space(const AffineSolutionSpace& space,
                                      const std::vector<Scalar>& functional, const Scalar& offset) {
  assert(functional.size() == space.labels.size());
  std::vector<Scalar> out;
  out.reserve(space.kernel.size() + 1);
  Scalar v = offset;
  for (std::size_t j = 0; j < functional.size(); ++j) v += functional[j] * space.particular[j];
  out.push_back(v);
  for (const auto& k : space.kernel) {
    Scalar kv(0);
    for (std::size_t j = 0; j < functional.size(); ++j) kv += functional[j] * k[j];
    out.push_back(kv);
  }
  return out;
}

}  // namespace spinflux
