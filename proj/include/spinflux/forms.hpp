#pragma once

#include <map>
#include <vector>

#include "spinflux/scalar.hpp"

namespace spinflux {

/// Strictly increasing 1-based index tuple e_{i1...ik}.
using IndexTuple = std::vector<int>;

/// Sparse alternating multilinear form on R^n (n = 7 or 8). Only strictly
/// increasing tuples are stored and zero coefficients are dropped.
class ExteriorForm {
 public:
  ExteriorForm() = default;
  ExteriorForm(int n, int k) : n_(n), k_(k) {}

  static ExteriorForm monomial(int n, IndexTuple idx, Scalar coef = Scalar(1));
  static ExteriorForm zero(int n, int k) { return ExteriorForm(n, k); }

  int ambient() const { return n_; }
  int degree() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexTuple, Scalar>& terms() const { return terms_; }

  Scalar coefficient(const IndexTuple& idx) const;
  void add_term(IndexTuple idx, const Scalar& coef);  // sorts and signs as needed

  ExteriorForm operator+(const ExteriorForm& o) const;
  ExteriorForm operator-(const ExteriorForm& o) const;
  ExteriorForm operator-() const;
  ExteriorForm operator*(const Scalar& c) const;
  bool operator==(const ExteriorForm& o) const;

  ExteriorForm substitute(const std::map<Var, Rational>& assignment) const;

  std::string to_string() const;

 private:
  int n_ = 0, k_ = 0;
  std::map<IndexTuple, Scalar> terms_;
};

/// Graded-commutative wedge product.
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// Interior product by the i-th frame vector (degree -1 antiderivation).
ExteriorForm contract(int i, const ExteriorForm& w);

struct OrientedFrame {
  int n;  // volume form is e_1 ^ ... ^ e_n, positively oriented
};

/// Hodge star for the standard metric and orientation.
ExteriorForm hodge(const ExteriorForm& w, const OrientedFrame& frame);

/// Sum of squared coefficients in the orthonormal monomial basis.
Scalar norm_sq(const ExteriorForm& w);

/// Infinitesimal so(n) action of a 2-form on a k-form (derivation degree 0).
ExteriorForm rotate_form(const ExteriorForm& generator2, const ExteriorForm& w);

/// The invariant 2-forms of the algebraic three-contact frame on R^7.
ExteriorForm de1();  // e35 + e46
ExteriorForm de2();  // e45 - e36
ExteriorForm de7();  // e34 - e56

/// All strictly increasing k-tuples from 1..n in lexicographic order.
std::vector<IndexTuple> increasing_tuples(int n, int k);

/// Sorts indices in place; returns the permutation sign, 0 on a repeat.
int sort_index_tuple(IndexTuple& idx);

}  // namespace spinflux
