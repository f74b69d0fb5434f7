#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace spinflux {

using Rational = mpq_class;

/// The fixed variable set of the engine. All symbolic computations happen
/// in the rational function field Q(p, q, s, y, f, r, lambda).
enum class Var : std::uint8_t { p = 0, q, s, y, f, r, lambda };

inline constexpr int kNumVars = 7;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

/// Exponent vector of a monomial in the seven variables.
struct Monomial {
  std::array<std::uint8_t, kNumVars> exp{};

  int total_degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_constant() const { return total_degree() == 0; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides(other) of *this
  bool operator==(const Monomial& other) const { return exp == other.exp; }
};

/// Canonical monomial order: total degree first, then lexicographic on the
/// exponent vector (p before q before ... before lambda). Terms are stored
/// descending, so the leading term comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted descending in the canonical order; zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial variable(Var v);
  static Polynomial constant(const Rational& c) { return Polynomial(c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (zero polynomial -> 0). Only meaningful together
  /// with is_constant().
  Rational constant_value() const;
  int total_degree() const;
  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Exact division; nullopt when the division leaves a remainder.
  std::optional<Polynomial> divided_by(const Polynomial& d) const;

  /// Substitute variables by rationals (partial substitutions allowed).
  Polynomial substitute(const std::map<Var, Rational>& assignment) const;

  /// Canonical string, e.g. "4*p - 3*q" or "-7/2*p*q^2 + 1".
  std::string to_string() const;
  static Polynomial parse(const std::string& text);

  /// Scale to integer coefficients with content 1 and positive leading
  /// coefficient. Returns the removed rational factor c with *this == c * out.
  Rational make_primitive();

  /// Primitive gcd with positive leading coefficient (gcd(0,b) = primitive b).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Construct directly from a term list (unsorted, may contain zeros).
  static Polynomial from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
  void normalize_sorted();  // assumes sorted, strips zeros
};

struct denominator_vanishes : std::runtime_error {
  explicit denominator_vanishes(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced fraction of polynomials. Canonical form: gcd(num, den) = 1 and
/// den integer-primitive with positive leading coefficient, so equality is
/// structural.
struct RationalFunction {
  Polynomial num;
  Polynomial den;
};

/// Element of the coefficient field: an exact rational, or a rational
/// function in the named parameters. All arithmetic is exact.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) { canonicalize_rational(); }
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long num, long den);
  explicit Scalar(const Polynomial& p);
  Scalar(const Polynomial& num, const Polynomial& den);

  static Scalar var(Var v) { return Scalar(Polynomial::variable(v)); }
  static Scalar of(const std::string& text);  // parse "num" or "num/den" polynomial expr

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const;
  bool is_one() const;
  /// Value as a rational; throws unless is_rational().
  const Rational& rational_value() const;

  const Polynomial& numerator_poly() const;
  const Polynomial& denominator_poly() const;
  Polynomial numerator_copy() const;
  Polynomial denominator_copy() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws std::domain_error on /0
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  /// Fused a -= b*c with a fast path for plain rationals.
  void submul(const Scalar& b, const Scalar& c);
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact substitution. Throws denominator_vanishes when the assignment
  /// zeroes the denominator.
  Scalar substitute(const std::map<Var, Rational>& assignment) const;

  std::string to_string() const;

 private:
  std::variant<Rational, RationalFunction> v_;
  void canonicalize_rational();
  static Scalar make(Polynomial num, Polynomial den);
  // canonical form of an already gcd-reduced fraction
  static Scalar finish_reduced(Polynomial num, Polynomial den);
};

inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);  // "3/4", "-2", ...

}  // namespace spinflux
