#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

/// Exponent vector of a monomial in t_1..t_K.
struct Monomial {
  std::vector<unsigned> exps;

  unsigned degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }

  bool divides(const Monomial& m) const {
    if (exps.size() != m.exps.size()) return false;
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

inline Monomial monomial_one(int nvars) { return Monomial{std::vector<unsigned>(nvars, 0u)}; }

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

/// a / b, assuming b divides a.
inline Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
  return r;
}

/// Degree-reverse-lexicographic order with priority t_1 > t_2 > ... > t_K:
/// higher total degree wins; on ties the monomial whose rightmost differing
/// exponent is smaller is the larger one.
inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

/// Term comparator placing the leading monomial first in a map.
struct DegrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in descending degrevlex order; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, DegrevlexGreater>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial variable(int nvars, int i, const Rational& coeff = 1) {
    Polynomial p(nvars);
    Monomial m = monomial_one(nvars);
    m.exps[i] = 1;
    p.add_term(m, coeff);
    return p;
  }

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(monomial_one(nvars), c);
    return p;
  }

  static Polynomial from_monomial(int nvars, const Monomial& m, const Rational& coeff = 1) {
    Polynomial p(nvars);
    p.add_term(m, coeff);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(m.exps.size()) != nvars_)
      throw std::invalid_argument("monomial arity mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  /// Multiply by a single term c * m.
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_);
    for (const auto& [mm, cc] : terms_) r.add_term(mm * m, cc * c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  void check_arity(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

inline std::string monomial_to_string(const Monomial& m, const std::string& stem = "t") {
  if (m.degree() == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) os << "*";
    os << stem << (i + 1);
    if (m.exps[i] != 1) os << "^" << m.exps[i];
    first = false;
  }
  return os.str();
}

inline std::string to_string(const Polynomial& p, const std::string& stem = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const std::string ms = monomial_to_string(m, stem);
    if (a != 1 || ms == "1") {
      os << a.get_str();
      if (ms != "1") os << "*";
    }
    if (ms != "1") os << ms;
    first = false;
  }
  return os.str();
}

}  // namespace toric
