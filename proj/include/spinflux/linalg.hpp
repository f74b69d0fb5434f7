#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinflux/scalar.hpp"

namespace spinflux {

/// Dense matrix over the exact scalar field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix substitute(const std::map<Var, Rational>& assignment) const;

  /// Stack rows of two matrices with equal column counts.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// A scalar asserted nonzero during elimination, with provenance.
struct GenericityCondition {
  Scalar value;        // nonzero polynomial (numerator of the pivot)
  std::string source;  // which pivot produced it
  bool special_locus;  // matches 4p-3q or p-q

  bool operator==(const GenericityCondition& o) const { return value == o.value; }
};

struct RrefResult {
  Matrix r;
  std::vector<int> pivot_columns;
  std::vector<GenericityCondition> conditions;
  int rank() const { return int(pivot_columns.size()); }
};

/// Reduced row echelon form over the fraction field. Every division by a
/// parameter-dependent pivot is recorded; constant pivots record nothing.
RrefResult rref(const Matrix& m);

/// Exact inverse; throws std::invalid_argument on singular input.
Matrix inverse(const Matrix& m);

/// Basis of the right kernel (empty when the map is injective).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m,
                                              std::vector<GenericityCondition>* conditions = nullptr);

int rank(const Matrix& m);

/// Full affine solution set of an inhomogeneous system. Kernel vectors are
/// linearly independent; `dimension` is their count.
class AffineSolutionSpace {
 public:
  std::vector<std::string> labels;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
  std::vector<GenericityCondition> conditions;

  int dimension() const { return int(kernel.size()); }
  std::vector<Scalar> member(const std::vector<Scalar>& coeffs) const;

  /// Originating system, kept for re-solving under specialization and for
  /// intersections.
  const Matrix& system_matrix() const { return m_; }
  const std::vector<Scalar>& system_rhs() const { return b_; }
  void set_system(Matrix m, std::vector<Scalar> b) { m_ = std::move(m), b_ = std::move(b); }

  int label_index(const std::string& label) const;

 private:
  Matrix m_;
  std::vector<Scalar> b_;
};

struct Infeasible {
  std::vector<Scalar> obstructions;  // nonzero residuals of the echelon form
};

using SolveOutcome = std::variant<AffineSolutionSpace, Infeasible>;

SolveOutcome solve_affine(const Matrix& m, const std::vector<Scalar>& b,
                          std::vector<std::string> labels = {});

inline bool is_infeasible(const SolveOutcome& s) { return std::holds_alternative<Infeasible>(s); }
inline const AffineSolutionSpace& space_of(const SolveOutcome& s) {
  return std::get<AffineSolutionSpace>(s);
}

/// Exact substitution into a solution space; re-solves the stored system
/// when a recorded genericity condition vanishes under the assignment.
SolveOutcome specialize(const AffineSolutionSpace& space, const std::map<Var, Rational>& assignment);

/// Affine intersection of two solution sets over the same variables.
SolveOutcome intersect(const AffineSolutionSpace& a, const AffineSolutionSpace& b);

/// Implicit description {x : M x = b} of an affine space (rows independent).
std::pair<Matrix, std::vector<Scalar>> implicit_system(const AffineSolutionSpace& space);

/// Equality as affine subsets (mutual containment).
bool same_affine_space(const AffineSolutionSpace& a, const AffineSolutionSpace& b);

/// Re-parametrize so the given labels become the free variables. Fails with
/// nullopt when those coordinates do not parametrize the space.
std::optional<AffineSolutionSpace> with_free_variables(const AffineSolutionSpace& space,
                                                       const std::vector<std::string>& free_labels);

/// Affine-linear functional `offset + sum coeffs[label]*x[label]` evaluated on
/// the whole space: returns the pair (value at particular, values on kernel).
std::vector<Scalar> evaluate_on_space(const AffineSolutionSpace& space,
                                      const std::vector<Scalar>& functional, const Scalar& offset);

}  // namespace spinflux
