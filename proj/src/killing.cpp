#include "spinflux/killing.hpp"

#include <stdexcept>

namespace spinflux {

ParametricFormFamily::ParametricFormFamily(int degree,
                                           std::vector<std::pair<std::string, ExteriorForm>> basis)
    : degree_(degree), basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("empty form family");
  // linear independence of the base forms
  std::map<IndexTuple, int> slot;
  for (const auto& [label, form] : basis_) {
    if (form.degree() != degree_) throw std::invalid_argument("family degree mismatch");
    for (const auto& [idx, c] : form.terms()) slot.emplace(idx, int(slot.size()));
  }
  Matrix m(int(slot.size()), int(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (const auto& [idx, c] : basis_[j].second.terms()) m.at(slot[idx], int(j)) = c;
  if (rank(m) != int(basis_.size()))
    throw std::invalid_argument("family base forms are linearly dependent");
}

ExteriorForm ParametricFormFamily::member(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != basis_.size()) throw std::invalid_argument("coefficient count mismatch");
  ExteriorForm out(ambient(), degree_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out = out + basis_[i].second * coeffs[i];
  }
  return out;
}

std::vector<std::string> ParametricFormFamily::labels() const {
  std::vector<std::string> out;
  out.reserve(basis_.size());
  for (const auto& [label, form] : basis_) out.push_back(label);
  return out;
}

namespace {

Spinor conn_term(const CliffordRep& rep, const ConnectionTerm& conn, int i, const Spinor& psi) {
  if (std::holds_alternative<ZeroConn>(conn)) return Spinor{std::vector<Scalar>(rep.dim)};
  if (const auto* k = std::get_if<KillingConn>(&conn))
    return act_vector(rep, i, psi) * k->lambda;
  const auto& m = std::get<MapConn>(conn);
  return Spinor{m.endo.at(i - 1).apply(psi.c)};
}

}  // namespace

KillingSystem assemble(const CliffordRep& rep, const ConnectionTerm& conn,
                       const ParametricFormFamily& torsion_fam,
                       const ParametricFormFamily& flux_fam, const Scalar& p, const Scalar& q,
                       const Spinor& psi, const std::vector<Spinor>* row_basis) {
  if (psi.is_zero()) throw std::invalid_argument("assemble: zero spinor");
  if (torsion_fam.ambient() != rep.n || flux_fam.ambient() != rep.n)
    throw std::invalid_argument("assemble: family ambient dimension mismatch");
  const int nt = torsion_fam.size(), nf = flux_fam.size();
  KillingSystem sys;
  sys.n = rep.n;
  sys.dim = rep.dim;
  sys.p = p;
  sys.q = q;
  sys.torsion_count = nt;
  sys.labels = torsion_fam.labels();
  for (const auto& l : flux_fam.labels()) sys.labels.push_back(l);
  sys.m = Matrix(rep.n * rep.dim, nt + nf);
  sys.rhs.assign(rep.n * rep.dim, Scalar(0));
  const Scalar quarter(1, 4);
  for (int i = 1; i <= rep.n; ++i) {
    const int row0 = (i - 1) * rep.dim;
    Spinor inhom = conn_term(rep, conn, i, psi);
    for (int a = 0; a < rep.dim; ++a) {
      sys.rhs[row0 + a] = -inhom.c[a];
      sys.provenance.push_back({i, a});
    }
    for (int j = 0; j < nt; ++j) {
      Spinor col = act_form(rep, contract(i, torsion_fam.base_form(j)), psi) * quarter;
      for (int a = 0; a < rep.dim; ++a) sys.m.at(row0 + a, j) = col.c[a];
    }
    for (int j = 0; j < nf; ++j) {
      const ExteriorForm& base = flux_fam.base_form(j);
      Spinor col = act_form(rep, contract(i, base), psi) * p +
                   act_form(rep, wedge(ExteriorForm::monomial(rep.n, {i}), base), psi) * q;
      for (int a = 0; a < rep.dim; ++a) sys.m.at(row0 + a, nt + j) = col.c[a];
    }
  }
  if (row_basis) {
    if (int(row_basis->size()) != rep.dim)
      throw std::invalid_argument("assemble: row basis size mismatch");
    Matrix b(rep.dim, rep.dim);
    for (int j = 0; j < rep.dim; ++j)
      for (int a = 0; a < rep.dim; ++a) b.at(a, j) = (*row_basis)[j].c[a];
    Matrix binv = inverse(b);
    for (int i = 0; i < rep.n; ++i) {
      const int row0 = i * rep.dim;
      Matrix block(rep.dim, sys.m.cols() + 1);
      for (int a = 0; a < rep.dim; ++a) {
        for (int j = 0; j < sys.m.cols(); ++j) block.at(a, j) = sys.m.at(row0 + a, j);
        block.at(a, sys.m.cols()) = sys.rhs[row0 + a];
      }
      Matrix turned = binv * block;
      for (int a = 0; a < rep.dim; ++a) {
        for (int j = 0; j < sys.m.cols(); ++j) sys.m.at(row0 + a, j) = turned.at(a, j);
        sys.rhs[row0 + a] = turned.at(a, sys.m.cols());
      }
    }
  }
  return sys;
}

Matrix constraint_rows(const CliffordRep& rep, const ParametricFormFamily& fam, const Spinor& psi) {
  if (psi.is_zero()) throw std::invalid_argument("constraint_rows: zero spinor");
  Matrix m(rep.dim, fam.size());
  for (int j = 0; j < fam.size(); ++j) {
    Spinor col = act_form(rep, fam.base_form(j), psi);
    for (int a = 0; a < rep.dim; ++a) m.at(a, j) = col.c[a];
  }
  return m;
}

Matrix widen_constraint(const Matrix& rows, int column_offset, int total_columns) {
  Matrix out(rows.rows(), total_columns);
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < rows.cols(); ++j) out.at(i, column_offset + j) = rows.at(i, j);
  return out;
}

SolveOutcome solve_killing(const KillingSystem& sys, const std::vector<Matrix>& extra,
                           SolveStats* stats) {
  Matrix m = sys.m;
  std::vector<Scalar> rhs = sys.rhs;
  for (const auto& block : extra) {
    if (block.cols() != m.cols()) throw std::invalid_argument("constraint block width mismatch");
    m = Matrix::vstack(m, block);
    rhs.resize(rhs.size() + block.rows(), Scalar(0));
  }
  // prune identically-zero equations; the trivial-equation count refers to
  // the assembled system itself, not to appended constraint blocks
  int zero_rows = 0;
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i) {
    bool zero = rhs[i].is_zero();
    if (zero)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) {
          zero = false;
          break;
        }
    if (zero) {
      if (i < sys.m.rows()) ++zero_rows;
    } else {
      keep.push_back(i);
    }
  }
  Matrix pruned(int(keep.size()), m.cols());
  std::vector<Scalar> pruned_rhs;
  pruned_rhs.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (int j = 0; j < m.cols(); ++j) pruned.at(int(i), j) = m.at(keep[i], j);
    pruned_rhs.push_back(rhs[keep[i]]);
  }
  auto outcome = solve_affine(pruned, pruned_rhs, sys.labels);
  if (stats) {
    stats->total_rows = sys.m.rows();
    stats->zero_rows = zero_rows;
    stats->rank = is_infeasible(outcome) ? -1
                                         : int(sys.labels.size()) - space_of(outcome).dimension();
  }
  return outcome;
}

Matrix endo_matrix(const CliffordRep& rep, const ExteriorForm& w, const std::vector<Spinor>& basis) {
  if (int(basis.size()) != rep.dim) throw std::invalid_argument("endo_matrix: basis size mismatch");
  Matrix b(rep.dim, rep.dim);
  for (int j = 0; j < rep.dim; ++j)
    for (int i = 0; i < rep.dim; ++i) b.at(i, j) = basis[j].c[i];
  Matrix action = form_action(rep, w);
  // solve B * C = action * B column by column
  Matrix target = action * b;
  Matrix aug(rep.dim, 2 * rep.dim);
  for (int i = 0; i < rep.dim; ++i)
    for (int j = 0; j < rep.dim; ++j) {
      aug.at(i, j) = b.at(i, j);
      aug.at(i, rep.dim + j) = target.at(i, j);
    }
  RrefResult res = rref(aug);
  if (res.rank() != rep.dim) throw std::invalid_argument("endo_matrix: degenerate basis");
  Matrix c(rep.dim, rep.dim);
  for (int i = 0; i < rep.dim; ++i)
    for (int j = 0; j < rep.dim; ++j) c.at(i, j) = res.r.at(i, rep.dim + j);
  return c;
}

ContractionReport dirac_contract(const CliffordRep& rep, const ConnectionTerm& conn,
                                 const ExteriorForm& torsion, const ExteriorForm& flux,
                                 const Scalar& p, const Scalar& q, const Spinor& psi) {
  ContractionReport report;
  const int n = rep.n;
  Matrix t_sum(rep.dim, rep.dim), f_sum(rep.dim, rep.dim), w_sum(rep.dim, rep.dim);
  for (int i = 1; i <= n; ++i) {
    ExteriorForm ei = ExteriorForm::monomial(n, {i});
    t_sum = t_sum + rep.generator(i) * form_action(rep, contract(i, torsion));
    f_sum = f_sum + rep.generator(i) * form_action(rep, contract(i, flux));
    w_sum = w_sum + rep.generator(i) * form_action(rep, wedge(ei, flux));
  }
  Matrix t_action = form_action(rep, torsion);
  Matrix f_action = form_action(rep, flux);
  report.torsion_identity = t_sum == t_action.scaled(Scalar(3));
  report.flux_identity = f_sum == f_action.scaled(Scalar(4));
  report.wedge_identity = w_sum == f_action.scaled(Scalar(-(n - 4)));
  report.flux_coefficient = Scalar(4) * p - Scalar(n - 4) * q;

  // contracted equation: sum_i e_i . (full equation in direction i) = 0,
  // i.e. Dirac part + (3/4) T psi + (4p - (n-4)q) F psi = 0
  Spinor dirac{std::vector<Scalar>(rep.dim)};
  for (int i = 1; i <= n; ++i)
    dirac = dirac + act_vector(rep, i, conn_term(rep, conn, i, psi));
  Spinor total = dirac + act_form(rep, torsion, psi) * Scalar(3, 4) +
                 act_form(rep, flux, psi) * report.flux_coefficient;
  report.contracted_equation_holds = total.is_zero();
  return report;
}

BoundReport bound_check(const Scalar& c, int n, const Scalar& scal_min) {
  BoundReport report;
  report.lhs = c * c;
  report.rhs = Scalar(4 * n, 9 * (n - 1)) * scal_min;
  Scalar diff = report.lhs - report.rhs;
  if (diff.is_zero())
    report.status = BoundStatus::equality;
  else if (diff.is_rational() && diff.rational_value() > 0)
    report.status = BoundStatus::strict;
  else
    report.status = BoundStatus::violated;
  return report;
}

std::optional<Scalar> eigenvalue_on(const CliffordRep& rep, const ExteriorForm& w,
                                    const Spinor& psi) {
  Spinor image = act_form(rep, w, psi);
  // find the first nonzero coordinate of psi and test proportionality
  int pivot = -1;
  for (int i = 0; i < rep.dim; ++i)
    if (!psi.c[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw std::invalid_argument("eigenvalue_on: zero spinor");
  Scalar c = image.c[pivot] / psi.c[pivot];
  if (image == psi * c) return c;
  return std::nullopt;
}

}  // namespace spinflux
