#include "spinflux/forms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace spinflux {

int sort_index_tuple(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

ExteriorForm ExteriorForm::monomial(int n, IndexTuple idx, Scalar coef) {
  ExteriorForm f(n, int(idx.size()));
  f.add_term(std::move(idx), coef);
  return f;
}

Scalar ExteriorForm::coefficient(const IndexTuple& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ExteriorForm::add_term(IndexTuple idx, const Scalar& coef) {
  if (coef.is_zero()) return;
  if (int(idx.size()) != k_) throw std::invalid_argument("term degree mismatch");
  IndexTuple sorted = std::move(idx);
  int sign = sort_index_tuple(sorted);
  if (sign == 0) return;
  for (int i : sorted)
    if (i < 1 || i > n_) throw std::out_of_range("form index out of range");
  Scalar c = sign > 0 ? coef : -coef;
  auto it = terms_.find(sorted);
  if (it == terms_.end()) {
    terms_.emplace(std::move(sorted), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& o) const {
  if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("form shape mismatch in +");
  ExteriorForm out(*this);
  for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
  return out;
}

ExteriorForm ExteriorForm::operator-(const ExteriorForm& o) const { return *this + (-o); }

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm out(n_, k_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

ExteriorForm ExteriorForm::operator*(const Scalar& c) const {
  ExteriorForm out(n_, k_);
  if (c.is_zero()) return out;
  for (const auto& [idx, v] : terms_) out.terms_.emplace(idx, v * c);
  return out;
}

bool ExteriorForm::operator==(const ExteriorForm& o) const {
  return n_ == o.n_ && k_ == o.k_ && terms_ == o.terms_;
}

ExteriorForm ExteriorForm::substitute(const std::map<Var, Rational>& assignment) const {
  ExteriorForm out(n_, k_);
  for (const auto& [idx, c] : terms_) {
    Scalar v = c.substitute(assignment);
    if (!v.is_zero()) out.terms_.emplace(idx, std::move(v));
  }
  return out;
}

std::string ExteriorForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*e";
    for (int i : idx) os << i;
  }
  return os.str();
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("wedge: ambient dimension mismatch");
  int k = a.degree() + b.degree();
  if (k > a.ambient()) return ExteriorForm(a.ambient(), std::min(k, a.ambient()));
  ExteriorForm out(a.ambient(), k);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

ExteriorForm contract(int i, const ExteriorForm& w) {
  if (w.degree() == 0) return ExteriorForm(w.ambient(), 0);
  ExteriorForm out(w.ambient(), w.degree() - 1);
  for (const auto& [idx, c] : w.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      if (idx[pos] != i) continue;
      IndexTuple rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != pos) rest.push_back(idx[t]);
      out.add_term(std::move(rest), (pos % 2 == 0) ? c : -c);
      break;  // indices are strictly increasing, i occurs at most once
    }
  }
  return out;
}

ExteriorForm hodge(const ExteriorForm& w, const OrientedFrame& frame) {
  if (w.ambient() != frame.n) throw std::invalid_argument("hodge: ambient dimension mismatch");
  const int n = frame.n;
  ExteriorForm out(n, n - w.degree());
  for (const auto& [idx, c] : w.terms()) {
    IndexTuple comp;
    comp.reserve(n - idx.size());
    std::size_t p = 0;
    for (int i = 1; i <= n; ++i) {
      if (p < idx.size() && idx[p] == i) {
        ++p;
        continue;
      }
      comp.push_back(i);
    }
    // sign: e_idx ^ e_comp = sign * vol
    IndexTuple full = idx;
    full.insert(full.end(), comp.begin(), comp.end());
    int sign = sort_index_tuple(full);
    out.add_term(std::move(comp), sign > 0 ? c : -c);
  }
  return out;
}

Scalar norm_sq(const ExteriorForm& w) {
  Scalar out(0);
  for (const auto& [idx, c] : w.terms()) out += c * c;
  return out;
}

ExteriorForm rotate_form(const ExteriorForm& generator2, const ExteriorForm& w) {
  if (generator2.degree() != 2) throw std::invalid_argument("rotation generator must be a 2-form");
  if (generator2.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  // generator e_a^e_b acts as the rotation e_a -> e_b, e_b -> -e_a;
  // extend as a derivation over each index slot.
  ExteriorForm out(w.ambient(), w.degree());
  for (const auto& [gidx, gc] : generator2.terms()) {
    const int a = gidx[0], b = gidx[1];
    for (const auto& [idx, c] : w.terms()) {
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        if (idx[pos] == a) {
          IndexTuple t = idx;
          t[pos] = b;
          out.add_term(std::move(t), gc * c);
        } else if (idx[pos] == b) {
          IndexTuple t = idx;
          t[pos] = a;
          out.add_term(std::move(t), -(gc * c));
        }
      }
    }
  }
  return out;
}

ExteriorForm de1() {
  ExteriorForm f(7, 2);
  f.add_term({3, 5}, Scalar(1));
  f.add_term({4, 6}, Scalar(1));
  return f;
}

ExteriorForm de2() {
  ExteriorForm f(7, 2);
  f.add_term({4, 5}, Scalar(1));
  f.add_term({3, 6}, Scalar(-1));
  return f;
}

ExteriorForm de7() {
  ExteriorForm f(7, 2);
  f.add_term({3, 4}, Scalar(1));
  f.add_term({5, 6}, Scalar(-1));
  return f;
}

std::vector<IndexTuple> increasing_tuples(int n, int k) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace spinflux
