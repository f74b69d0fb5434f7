#include "spinflux/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spinflux {

namespace {
constexpr const char* kVarNames[kNumVars] = {"p", "q", "s", "y", "f", "r", "lambda"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] + other.exp[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] - other.exp[i]);
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.exp > b.exp;  // lexicographic on exponent vectors
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  Monomial m;
  m.exp[static_cast<int>(v)] = 1;
  p.terms_.push_back({m, Rational(1)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return terms_[0].first.total_degree();
}

int Polynomial::degree_in(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.first.exp[static_cast<int>(v)]));
  return d;
}

void Polynomial::normalize_sorted() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, MonomialOrder> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.emplace(t.first, t.second);
    if (!inserted) it->second += t.second;
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  MonomialOrder lt;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    } else if (lt(terms_[i].first, o.terms_[j].first)) {
      out.terms_.push_back(terms_[i]);
      ++i;
    } else {
      out.terms_.push_back(o.terms_[j]);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::map<Monomial, Rational, MonomialOrder> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.first * b.first;
      auto [it, inserted] = acc.emplace(std::move(m), a.second * b.second);
      if (!inserted) it->second += a.second * b.second;
    }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial p(*this);
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Term> quotient;
  Polynomial rem(*this);
  const Term& dl = d.leading_term();
  while (!rem.is_zero()) {
    const Term& rl = rem.leading_term();
    if (!dl.first.divides(rl.first)) return std::nullopt;
    Term qt{rl.first / dl.first, rl.second / dl.second};
    Polynomial step;
    step.terms_.push_back(qt);
    rem = rem - step * d;
    quotient.push_back(std::move(qt));
  }
  Polynomial out;
  out.terms_ = std::move(quotient);
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return MonomialOrder{}(a.first, b.first); });
  return out;
}

Polynomial Polynomial::substitute(const std::map<Var, Rational>& assignment) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest{};
    for (int i = 0; i < kNumVars; ++i) {
      if (m.exp[i] == 0) continue;
      auto it = assignment.find(static_cast<Var>(i));
      if (it == assignment.end()) {
        rest.exp[i] = m.exp[i];
      } else {
        for (int k = 0; k < m.exp[i]; ++k) coef *= it->second;
      }
    }
    out.push_back({rest, std::move(coef)});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::make_primitive() {
  if (is_zero()) return Rational(1);
  // content = gcd(numerators) / lcm(denominators), sign of leading coefficient
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_class n = t.second.get_num();
    mpz_class d = t.second.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (terms_[0].second < 0) content = -content;
  for (auto& t : terms_) {
    t.second /= content;
    t.second.canonicalize();
  }
  return content;
}

namespace {

// Coefficients of p viewed as a univariate polynomial in v, index = v-degree.
std::vector<Polynomial> coefficients_in(const Polynomial& p, Var v) {
  const int vi = static_cast<int>(v);
  std::vector<std::vector<Polynomial::Term>> buckets(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int d = rest.exp[vi];
    rest.exp[vi] = 0;
    buckets[d].push_back({rest, c});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

Polynomial assemble_in(const std::vector<Polynomial>& coeffs, Var v) {
  const int vi = static_cast<int>(v);
  std::vector<Polynomial::Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (const auto& [m, c] : coeffs[d].terms()) {
      Monomial mm = m;
      mm.exp[vi] = static_cast<std::uint8_t>(d);
      terms.push_back({mm, c});
    }
  return Polynomial::from_terms(std::move(terms));
}

std::optional<Var> lowest_var(const Polynomial& a, const Polynomial& b) {
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return std::nullopt;
}

// content of p w.r.t. v: gcd of its v-coefficients
Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& c : coefficients_in(p, v)) {
    g = Polynomial::gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial var_power(Var v, int e) {
  Polynomial out{Rational(1)};
  for (int k = 0; k < e; ++k) out = out * Polynomial::variable(v);
  return out;
}

// Proper pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, viewed in v.
Polynomial pseudo_rem(const Polynomial& f0, const Polynomial& g, Var v) {
  const int dg = g.degree_in(v);
  const Polynomial glead = coefficients_in(g, v).back();
  Polynomial f = f0;
  int e = f.degree_in(v) - dg + 1;
  while (!f.is_zero() && f.degree_in(v) >= dg) {
    auto fc = coefficients_in(f, v);
    const int df = int(fc.size()) - 1;
    f = f * glead - g * (fc.back() * var_power(v, df - dg));
    --e;
  }
  for (; e > 0; --e) f = f * glead;
  return f;
}

// Subresultant polynomial remainder sequence; inputs primitive in v with
// deg_v f >= deg_v g >= 1. Returns the primitive gcd w.r.t. v.
Polynomial subresultant_gcd(Polynomial f, Polynomial g, Var v) {
  Polynomial gg{Rational(1)}, h{Rational(1)};
  while (true) {
    const int delta = f.degree_in(v) - g.degree_in(v);
    Polynomial rem = pseudo_rem(f, g, v);
    if (rem.is_zero()) {
      Polynomial out = *g.divided_by(content_in(g, v));
      out.make_primitive();
      return out;
    }
    if (rem.degree_in(v) == 0) return Polynomial(Rational(1));
    Polynomial divisor = gg;
    for (int k = 0; k < delta; ++k) divisor = divisor * h;
    f = std::move(g);
    g = *rem.divided_by(divisor);
    gg = coefficients_in(f, v).back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      Polynomial num{Rational(1)};
      for (int k = 0; k < delta; ++k) num = num * gg;
      Polynomial den{Rational(1)};
      for (int k = 0; k < delta - 1; ++k) den = den * h;
      h = *num.divided_by(den);
    }
  }
}

// Dense univariate gcd degree over Q.
int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a), trim(b);
  if (a.empty()) return int(b.size()) - 1;
  if (b.empty()) return int(a.size()) - 1;
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    // a mod b
    while (a.size() >= b.size()) {
      Rational c = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
      trim(a);
      if (a.empty()) return int(b.size()) - 1;
    }
    std::swap(a, b);
    if (b.empty()) return int(a.size()) - 1;
  }
}

std::vector<Rational> univariate_image(const Polynomial& p, Var v,
                                       const std::map<Var, Rational>& at) {
  Polynomial q = p.substitute(at);
  std::vector<Rational> out(q.degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : q.terms()) out[m.exp[static_cast<int>(v)]] += c;
  return out;
}

// Certified check that gcd(a, b) has degree 0 in v: a specialization of all
// other variables that preserves both leading v-coefficients and yields
// coprime univariate images proves coprimality in v.
bool certified_coprime_in(const Polynomial& a, const Polynomial& b, Var v) {
  const Polynomial la = coefficients_in(a, v).back();
  const Polynomial lb = coefficients_in(b, v).back();
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::map<Var, Rational> at;
    for (int i = 0; i < kNumVars; ++i) {
      Var w = static_cast<Var>(i);
      if (w == v) continue;
      if (a.degree_in(w) > 0 || b.degree_in(w) > 0)
        at[w] = Rational(2 + attempt * 7 + i * 3);
    }
    if (la.substitute(at).is_zero() || lb.substitute(at).is_zero()) continue;
    if (univariate_gcd_degree(univariate_image(a, v, at), univariate_image(b, v, at)) == 0)
      return true;
    return false;  // images share a factor; fall through to the full gcd
  }
  return false;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) {
    Polynomial g(b);
    g.make_primitive();
    return g;
  }
  if (b.is_zero()) {
    Polynomial g(a);
    g.make_primitive();
    return g;
  }
  Polynomial pa(a), pb(b);
  pa.make_primitive();
  pb.make_primitive();

  // common monomial factor
  Monomial ma = pa.terms()[0].first, mb = pb.terms()[0].first;
  for (const auto& t : pa.terms())
    for (int i = 0; i < kNumVars; ++i) ma.exp[i] = std::min(ma.exp[i], t.first.exp[i]);
  for (const auto& t : pb.terms())
    for (int i = 0; i < kNumVars; ++i) mb.exp[i] = std::min(mb.exp[i], t.first.exp[i]);
  Monomial mg;
  for (int i = 0; i < kNumVars; ++i) mg.exp[i] = std::min(ma.exp[i], mb.exp[i]);
  if (ma.total_degree() > 0) {
    Polynomial div;
    div.terms_.push_back({ma, Rational(1)});
    pa = *pa.divided_by(div);
  }
  if (mb.total_degree() > 0) {
    Polynomial div;
    div.terms_.push_back({mb, Rational(1)});
    pb = *pb.divided_by(div);
  }
  Polynomial mono;
  mono.terms_.push_back({mg, Rational(1)});

  if (pa.is_constant() || pb.is_constant()) return mono;
  if (pa == pb) return mono * pa;

  auto mv = lowest_var(pa, pb);
  if (!mv) return mono;
  Var v = *mv;
  if (pa.degree_in(v) == 0 || pb.degree_in(v) == 0) {
    // v occurs in only one of them: common divisors cannot involve v
    Polynomial ca = pa.degree_in(v) == 0 ? pa : content_in(pa, v);
    Polynomial cb = pb.degree_in(v) == 0 ? pb : content_in(pb, v);
    return mono * gcd(ca, cb);
  }

  if (certified_coprime_in(pa, pb, v)) {
    // coprime as polynomials in v; only the v-contents can share factors
    Polynomial ca = content_in(pa, v);
    Polynomial cb = content_in(pb, v);
    if (ca.is_constant() || cb.is_constant()) return mono;
    return mono * gcd(ca, cb);
  }

  Polynomial ca = content_in(pa, v);
  Polynomial cb = content_in(pb, v);
  Polynomial f = *pa.divided_by(ca);
  Polynomial g = *pb.divided_by(cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  Polynomial prs = g.degree_in(v) == 0 ? Polynomial(Rational(1)) : subresultant_gcd(f, g, v);
  Polynomial result = mono * gcd(ca, cb) * prs;
  result.make_primitive();
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool printed_coef = false;
    if (ac != 1 || m.is_constant()) {
      os << rational_to_string(ac);
      printed_coef = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (m.exp[i] == 0) continue;
      if (printed_coef) os << "*";
      os << kVarNames[i];
      if (m.exp[i] > 1) os << "^" << int(m.exp[i]);
      printed_coef = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected integer in '" + s + "' at " + std::to_string(i));
    return mpz_class(s.substr(start, i - start));
  }

  Polynomial parse_factor() {
    skip_ws();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class num = parse_integer();
      if (peek() == '/') {
        ++i;
        mpz_class den = parse_integer();
        Rational q(num, den);
        q.canonicalize();
        return Polynomial(q);
      }
      return Polynomial(Rational(num));
    }
    std::size_t start = i;
    while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (start == i) throw std::invalid_argument("bad polynomial syntax in '" + s + "' at " + std::to_string(i));
    auto v = var_from_name(s.substr(start, i - start));
    if (!v) throw std::invalid_argument("unknown variable '" + s.substr(start, i - start) + "'");
    Polynomial p = Polynomial::variable(*v);
    if (peek() == '^') {
      ++i;
      mpz_class e = parse_integer();
      Polynomial out{Rational(1)};
      for (mpz_class k = 0; k < e; ++k) out = out * p;
      return out;
    }
    return p;
  }

  Polynomial parse_term() {
    Polynomial out = parse_factor();
    while (peek() == '*') {
      ++i;
      out = out * parse_factor();
    }
    return out;
  }

  Polynomial parse_sum() {
    Polynomial out;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    out = neg ? -parse_term() : parse_term();
    while (!eof()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++i;
        Polynomial t = parse_term();
        out = c == '+' ? out + t : out - t;
      } else {
        throw std::invalid_argument("trailing input in polynomial '" + s + "'");
      }
    }
    return out;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  PolyParser p(text);
  if (p.eof()) throw std::invalid_argument("empty polynomial string");
  return p.parse_sum();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long num, long den) : v_(Rational(num, den)) {
  if (den == 0) throw std::domain_error("zero denominator");
  canonicalize_rational();
}

void Scalar::canonicalize_rational() {
  if (is_rational()) std::get<Rational>(v_).canonicalize();
}

Scalar::Scalar(const Polynomial& p) {
  if (p.is_constant())
    v_ = p.constant_value();
  else
    v_ = RationalFunction{p, Polynomial(Rational(1))};
}

Scalar::Scalar(const Polynomial& num, const Polynomial& den) { *this = make(num, den); }

Scalar Scalar::finish_reduced(Polynomial num, Polynomial den) {
  Scalar out;
  if (num.is_zero()) {
    out.v_ = Rational(0);
    return out;
  }
  Rational c = den.make_primitive();
  num = num * (Rational(1) / c);
  if (num.is_constant() && den.is_constant()) {
    out.v_ = num.constant_value() / den.constant_value();
    out.canonicalize_rational();
  } else {
    out.v_ = RationalFunction{std::move(num), std::move(den)};
  }
  return out;
}

Scalar Scalar::make(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return Scalar(0);
  Polynomial g = Polynomial::gcd(num, den);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num = *num.divided_by(g);
    den = *den.divided_by(g);
  }
  return finish_reduced(std::move(num), std::move(den));
}

bool Scalar::is_zero() const { return is_rational() && std::get<Rational>(v_) == 0; }
bool Scalar::is_one() const { return is_rational() && std::get<Rational>(v_) == 1; }

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return std::get<Rational>(v_);
}

Polynomial Scalar::numerator_copy() const {
  if (is_rational()) return Polynomial(std::get<Rational>(v_));
  return std::get<RationalFunction>(v_).num;
}

Polynomial Scalar::denominator_copy() const {
  if (is_rational()) return Polynomial(Rational(1));
  return std::get<RationalFunction>(v_).den;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-std::get<Rational>(v_)));
  const auto& rf = std::get<RationalFunction>(v_);
  Scalar out;
  out.v_ = RationalFunction{-rf.num, rf.den};
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational()) {
    Rational r = std::get<Rational>(v_) + std::get<Rational>(o.v_);
    r.canonicalize();
    return Scalar(r);
  }
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // reduced inputs: with g = gcd(b, d) the only factor shared by
  // a*(d/g) + c*(b/g) and the lcm b*(d/g) divides g
  Polynomial a = numerator_copy(), b = denominator_copy();
  Polynomial c = o.numerator_copy(), d = o.denominator_copy();
  Polynomial g = Polynomial::gcd(b, d);
  bool g_trivial = g.is_constant();
  Polynomial dg = g_trivial ? d : *d.divided_by(g);
  Polynomial bg = g_trivial ? b : *b.divided_by(g);
  Polynomial num = a * dg + c * bg;
  if (num.is_zero()) return Scalar(0);
  Polynomial den = b * dg;
  if (!g_trivial) {
    Polynomial h = Polynomial::gcd(num, g);
    if (!h.is_constant()) {
      num = *num.divided_by(h);
      den = *den.divided_by(h);
    }
  }
  return finish_reduced(std::move(num), std::move(den));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational()) {
    Rational r = std::get<Rational>(v_) * std::get<Rational>(o.v_);
    r.canonicalize();
    return Scalar(r);
  }
  if (is_zero() || o.is_zero()) return Scalar(0);
  if (is_rational() || o.is_rational()) {
    const Scalar& rf = is_rational() ? o : *this;
    const Rational& c = is_rational() ? std::get<Rational>(v_) : std::get<Rational>(o.v_);
    return finish_reduced(rf.numerator_copy() * c, rf.denominator_copy());
  }
  // cross-cancel so the product of reduced fractions stays reduced
  Polynomial a = numerator_copy(), b = denominator_copy();
  Polynomial c = o.numerator_copy(), d = o.denominator_copy();
  Polynomial g1 = Polynomial::gcd(a, d);
  if (!g1.is_constant()) {
    a = *a.divided_by(g1);
    d = *d.divided_by(g1);
  }
  Polynomial g2 = Polynomial::gcd(c, b);
  if (!g2.is_constant()) {
    c = *c.divided_by(g2);
    b = *b.divided_by(g2);
  }
  return finish_reduced(a * c, b * d);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (is_rational() && o.is_rational()) {
    Rational r = std::get<Rational>(v_) / std::get<Rational>(o.v_);
    r.canonicalize();
    return Scalar(r);
  }
  if (o.is_rational()) {
    if (is_zero()) return Scalar(0);
    return finish_reduced(numerator_copy() * (1 / std::get<Rational>(o.v_)), denominator_copy());
  }
  // invert and multiply via the cross-cancelling path
  Scalar inv;
  inv.v_ = RationalFunction{o.denominator_copy(), o.numerator_copy()};
  return *this * inv;
}

void Scalar::submul(const Scalar& b, const Scalar& c) {
  if (is_rational() && b.is_rational() && c.is_rational()) {
    std::get<Rational>(v_) -= std::get<Rational>(b.v_) * std::get<Rational>(c.v_);
    return;
  }
  *this = *this - b * c;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
  const auto& a = std::get<RationalFunction>(v_);
  const auto& b = std::get<RationalFunction>(o.v_);
  return a.num == b.num && a.den == b.den;
}

Scalar Scalar::substitute(const std::map<Var, Rational>& assignment) const {
  if (is_rational()) return *this;
  const auto& rf = std::get<RationalFunction>(v_);
  Polynomial den = rf.den.substitute(assignment);
  if (den.is_zero())
    throw denominator_vanishes("denominator vanishes under assignment: " + rf.den.to_string());
  return make(rf.num.substitute(assignment), std::move(den));
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(std::get<Rational>(v_));
  const auto& rf = std::get<RationalFunction>(v_);
  if (rf.den.is_constant() && rf.den.constant_value() == 1) return rf.num.to_string();
  return "(" + rf.num.to_string() + ")/(" + rf.den.to_string() + ")";
}

const Polynomial& Scalar::numerator_poly() const {
  static const Polynomial kOne{Rational(1)};
  if (is_rational()) throw std::domain_error("rational scalar has no stored polynomial");
  return std::get<RationalFunction>(v_).num;
}

const Polynomial& Scalar::denominator_poly() const {
  if (is_rational()) throw std::domain_error("rational scalar has no stored polynomial");
  return std::get<RationalFunction>(v_).den;
}

Scalar Scalar::of(const std::string& text) {
  auto slash = std::string::npos;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      // distinguish "3/4" (rational literal) from "(..)/(..)"
      if (i > 0 && text[i - 1] == ')') slash = i;
    }
  }
  auto strip_parens = [](std::string t) {
    auto first = t.find_first_not_of(" \t");
    auto last = t.find_last_not_of(" \t");
    if (first == std::string::npos) return std::string();
    t = t.substr(first, last - first + 1);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') return t.substr(1, t.size() - 2);
    return t;
  };
  if (slash == std::string::npos) return Scalar(Polynomial::parse(strip_parens(text)));
  Polynomial num = Polynomial::parse(strip_parens(text.substr(0, slash)));
  Polynomial den = Polynomial::parse(strip_parens(text.substr(slash + 1)));
  return Scalar(num, den);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  std::string t = text.substr(first, last - first + 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace spinflux
