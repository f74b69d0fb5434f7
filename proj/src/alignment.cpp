#include "spinflux/alignment.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace spinflux {

AffineSolutionSpace sasakian_reference_view(const CliffordRep& rep, const Spinor& psi,
                                            const Scalar& p, const Scalar& q) {
  KillingSystem sys = sasakian_system(rep, psi, p, q);
  auto outcome = solve_killing(sys);
  if (is_infeasible(outcome)) throw std::logic_error("three-contact system infeasible");
  auto re = with_free_variables(space_of(outcome), sasakian_table().free_labels);
  if (!re) throw std::logic_error("reference free set does not parametrize the solution space");
  return *re;
}

namespace {

// the six mixed-direction components that must vanish for a diagonal
// spinor 3-form: e_i ^ de_j with i != j contributes these lead monomials
bool omega3_is_diagonal(const CliffordRep& rep, const Spinor& psi) {
  ExteriorForm w3 = form_from_spinor(rep, psi);
  static const IndexTuple off[] = {{1, 4, 5}, {1, 3, 4}, {2, 3, 5},
                                   {2, 3, 4}, {3, 5, 7}, {4, 5, 7}};
  for (const auto& idx : off)
    if (!w3.coefficient(idx).is_zero()) return false;
  return true;
}

std::vector<std::vector<int>> candidate_coefficients() {
  std::vector<std::vector<int>> out;
  for (int bound : {1, 2}) {
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b)
        for (int c = -bound; c <= bound; ++c)
          for (int d = -bound; d <= bound; ++d) {
            std::vector<int> v{a, b, c, d};
            if (v == std::vector<int>{0, 0, 0, 0}) continue;
            if (bound == 2 && std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) < 2)
              continue;  // already tried at the smaller bound
            // normalize the overall sign: first nonzero entry positive
            for (int x : v) {
              if (x > 0) break;
              if (x < 0) {
                for (auto& y : v) y = -y;
                break;
              }
            }
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
          }
  }
  return out;
}

Spinor combine(const std::vector<Spinor>& basis, const std::vector<int>& coeffs) {
  Spinor out{std::vector<Scalar>(basis[0].c.size())};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    out = out + basis[i] * Scalar(coeffs[i]);
  }
  return out;
}

// expected flux endomorphism in the ordered basis, for the unit member of
// one free coefficient
Matrix expected_flux_endo(const std::string& u) {
  auto d = [&](const char* l) { return Scalar(u == l ? 1 : 0); };
  Matrix m(8, 8);
  for (int i = 0; i < 4; ++i) m.at(i, i) = -d("f");
  Scalar f = d("f"), a = d("f127"), b = d("f172"), c = d("f271");
  m.at(4, 4) = f - 2 * a - 2 * b - 2 * c;
  m.at(5, 5) = f + 2 * a + 2 * b - 2 * c;
  m.at(6, 6) = f + 2 * a - 2 * b + 2 * c;
  m.at(4, 5) = m.at(5, 4) = -4 * d("f177");
  m.at(4, 6) = m.at(6, 4) = -4 * d("f277");
  m.at(5, 6) = m.at(6, 5) = 4 * d("f272");
  m.at(7, 7) = f - 2 * a + 2 * b + 2 * c;
  return m;
}

struct AlignmentResult {
  std::vector<Spinor> basis;
  std::string note;
};

std::optional<AlignmentResult> try_align(const CliffordRep& rep,
                                         const ParametricFormFamily& flux_fam) {
  auto d70 = invariant_spinors(rep, su2_generators());
  if (d70.size() != 4) return std::nullopt;
  const Scalar sp = Scalar::var(Var::p), sq = Scalar::var(Var::q);

  Spinor psi3{std::vector<Scalar>(8)};
  AffineSolutionSpace view;
  std::vector<int> found_coeffs;
  bool found = false;
  for (const auto& coeffs : candidate_coefficients()) {
    Spinor cand = combine(d70, coeffs);
    if (!omega3_is_diagonal(rep, cand)) continue;
    AffineSolutionSpace v = sasakian_reference_view(rep, cand, sp, sq);
    if (!table_mismatch(v, sasakian_table())) {
      psi3 = cand;
      view = v;
      found_coeffs = coeffs;
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;

  // remaining invariant spinors: signed half-actions of the invariant
  // 2-forms on Psi_3, selected so the flux endomorphism matches its
  // reference block form
  std::vector<Spinor> j_action;
  for (const auto& g : {de1(), de2(), de7()})
    j_action.push_back(Spinor{spin_lift(rep, g).apply(psi3.c)});

  // complement basis: w, and the su(2) lifts of w (quaternionic frame)
  Matrix rows(4, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) rows.at(i, j) = d70[i].c[j];
  auto comp = kernel_basis(rows);
  if (comp.size() != 4) return std::nullopt;
  Spinor w{comp[0]};
  std::vector<Spinor> complement{w};
  for (const auto& g : su2_generators())
    complement.push_back(Spinor{spin_lift(rep, g).apply(w.c)});

  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& perm : perms)
    for (int smask = 0; smask < 8; ++smask) {
      std::vector<Spinor> basis(8, Spinor{std::vector<Scalar>(8)});
      basis[0] = complement[0];
      basis[1] = complement[1];
      basis[6] = complement[2];
      basis[7] = complement[3];
      basis[2] = psi3;
      for (int t = 0; t < 3; ++t) {
        Scalar sign((smask >> t) & 1 ? -1 : 1);
        basis[3 + t] = j_action[perm[t]] * sign;
      }
      std::vector<Spinor> ordered{basis[0], basis[1], basis[6], basis[7],
                                  basis[3], basis[4], basis[5], basis[2]};
      bool ok = true;
      for (std::size_t u = 0; u < view.kernel.size() && ok; ++u) {
        // flux part of the kernel generator for free label u
        std::vector<Scalar> fcoeffs;
        for (int j = 0; j < flux_fam.size(); ++j)
          fcoeffs.push_back(view.kernel[u][view.label_index(flux_fam.label(j))]);
        ExteriorForm flux = flux_fam.member(fcoeffs);
        Matrix endo = endo_matrix(rep, flux, ordered);
        if (!(endo == expected_flux_endo(sasakian_table().free_labels[u]))) ok = false;
      }
      if (!ok) continue;
      AlignmentResult result;
      result.basis = std::move(basis);
      std::ostringstream os;
      os << "Psi_3 = ";
      const char* sep = "";
      for (int i = 0; i < 4; ++i) {
        if (found_coeffs[i] == 0) continue;
        os << sep << found_coeffs[i] << "*k" << i + 1;
        sep = " + ";
      }
      os << " over the computed invariant-kernel basis; Psi_4, Psi_5, Psi_6 are the "
            "half-actions of the invariant 2-forms ("
         << (((smask >> 0) & 1) ? "-" : "+") << "de" << "127"[perm[0]] << ", "
         << (((smask >> 1) & 1) ? "-" : "+") << "de" << "127"[perm[1]] << ", "
         << (((smask >> 2) & 1) ? "-" : "+") << "de" << "127"[perm[2]]
         << ") on Psi_3; Psi_1, Psi_2, Psi_7, Psi_8 span the complement (w and its su(2) "
            "half-actions)";
      result.note = os.str();
      return result;
    }
  return std::nullopt;
}

StandardModel build_standard_model() {
  auto flux_fam = su2_families().second;
  for (bool flip : {false, true}) {
    CliffordRep rep = build_rep(7);
    if (flip)
      for (auto& g : rep.gen) g = g.scaled(Scalar(-1));
    auto result = try_align(rep, flux_fam);
    if (!result) continue;
    StandardModel model;
    model.rep7 = std::move(rep);
    model.parity_flipped = flip;
    model.basis = std::move(result->basis);
    std::ostringstream os;
    os << "generator parity: " << (flip ? "reversed" : "as constructed") << "; " << result->note;
    model.conventions = os.str();
    // the 16-dimensional representation doubles the aligned generators
    CliffordRep rep8;
    rep8.n = 8;
    rep8.dim = 16;
    for (const auto& e : model.rep7.gen) {
      Matrix big(16, 16);
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          big.at(i, 8 + j) = e.at(i, j);
          big.at(8 + i, j) = e.at(i, j);
        }
      rep8.gen.push_back(std::move(big));
    }
    Matrix e8(16, 16);
    for (int i = 0; i < 8; ++i) {
      e8.at(i, 8 + i) = Scalar(-1);
      e8.at(8 + i, i) = Scalar(1);
    }
    rep8.gen.push_back(std::move(e8));
    Matrix vol = rep8.gen[0];
    for (int i = 1; i < 8; ++i) vol = vol * rep8.gen[i];
    rep8.chirality = std::move(vol);
    verify_rep(rep8);
    model.rep8 = std::move(rep8);
    return model;
  }
  throw std::logic_error("no aligning spinor basis found");
}

}  // namespace

const StandardModel& standard_model() {
  static const StandardModel model = build_standard_model();
  return model;
}

}  // namespace spinflux
