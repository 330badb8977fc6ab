#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

/// Point of the class monoid, written additively: an integer exponent vector.
using MonoidElement = std::vector<long long>;

struct NoPositiveFunctional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer linear functional used to grade and truncate series. Valid for a
/// set of monoid generators when it takes value >= 1 on each of them.
struct WeightFunctional {
  std::vector<long long> coeffs;

  long long operator()(const MonoidElement& v) const {
    if (v.size() != coeffs.size()) throw std::invalid_argument("weight: rank mismatch");
    long long s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += coeffs[i] * v[i];
    return s;
  }
  bool operator==(const WeightFunctional& o) const { return coeffs == o.coeffs; }
};

/// Element of Z[C]: finitely many monoid points with nonzero integer values.
struct FiniteSupportFunction {
  int rank = 0;
  std::map<MonoidElement, Integer> support;

  Integer at(const MonoidElement& v) const {
    auto it = support.find(v);
    return it == support.end() ? Integer(0) : it->second;
  }
  void add(const MonoidElement& v, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = support.emplace(v, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) support.erase(it);
    }
  }
  bool operator==(const FiniteSupportFunction& o) const {
    return rank == o.rank && support == o.support;
  }
};

inline FiniteSupportFunction delta(int rank, const MonoidElement& v, const Integer& c = 1) {
  FiniteSupportFunction f;
  f.rank = rank;
  f.add(v, c);
  return f;
}

inline FiniteSupportFunction delta_zero(int rank) {
  return delta(rank, MonoidElement(rank, 0));
}

/// Weight-truncated series: coefficients are exact for every monoid point of
/// weight <= bound, and only such points are stored. Supported points must
/// have nonnegative weight.
struct TruncatedSeries {
  int rank = 0;
  WeightFunctional weight;
  long long bound = 0;
  std::map<MonoidElement, Integer> support;

  Integer at(const MonoidElement& v) const {
    auto it = support.find(v);
    return it == support.end() ? Integer(0) : it->second;
  }
  void add(const MonoidElement& v, const Integer& c) {
    if (c == 0) return;
    const long long w = weight(v);
    if (w < 0)
      throw std::invalid_argument("truncated series: element of negative weight");
    if (w > bound) return;
    auto [it, inserted] = support.emplace(v, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) support.erase(it);
    }
  }
};

inline FiniteSupportFunction convolve(const FiniteSupportFunction& f,
                                      const FiniteSupportFunction& g) {
  if (f.rank != g.rank) throw std::invalid_argument("convolve: rank mismatch");
  FiniteSupportFunction r;
  r.rank = f.rank;
  for (const auto& [u, cu] : f.support) {
    for (const auto& [v, cv] : g.support) {
      MonoidElement s(u.size());
      for (size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
      r.add(s, cu * cv);
    }
  }
  return r;
}

inline TruncatedSeries convolve(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.rank != g.rank) throw std::invalid_argument("convolve: rank mismatch");
  if (!(f.weight == g.weight))
    throw std::invalid_argument("convolve: weight functional mismatch");
  TruncatedSeries r;
  r.rank = f.rank;
  r.weight = f.weight;
  r.bound = std::min(f.bound, g.bound);
  for (const auto& [u, cu] : f.support) {
    for (const auto& [v, cv] : g.support) {
      MonoidElement s(u.size());
      for (size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
      r.add(s, cu * cv);
    }
  }
  return r;
}

/// Product of geometric factors 1/(1-e_v)^m over a numerator from Z[C].
struct RationalSeriesExpr {
  int rank = 0;
  FiniteSupportFunction numerator;                          // delta_0 for Euler series
  std::vector<std::pair<MonoidElement, int>> denominator_factors;  // (v, multiplicity)
};

/// A strictly positive integral grading for the given generators, found by
/// exact Fourier-Motzkin feasibility on l(v_i) >= 1 and scaled to integers.
/// Throws NoPositiveFunctional when the generators span no open half-space.
inline WeightFunctional find_positive_functional(const std::vector<MonoidElement>& generators) {
  if (generators.empty())
    throw std::invalid_argument("find_positive_functional: no generators");
  const size_t r = generators.front().size();
  std::vector<LinearConstraint> cons;
  for (const auto& v : generators) {
    if (v.size() != r) throw std::invalid_argument("generator rank mismatch");
    LinearConstraint c;
    c.a.reserve(r);
    for (long long x : v) c.a.push_back(Rational(make_integer(x)));
    c.b = 1;
    cons.push_back(std::move(c));
  }
  auto point = feasible_point(r, std::move(cons));
  if (!point)
    throw NoPositiveFunctional("generators do not lie in an open half-space");
  Integer scale = common_denominator(*point);
  WeightFunctional w;
  w.coeffs.reserve(r);
  for (const auto& q : *point) {
    Rational v = q * Rational(scale);
    w.coeffs.push_back(to_int64(Integer(v.get_num())));
  }
  for (const auto& v : generators)
    if (w(v) < 1) throw NoPositiveFunctional("internal: functional not positive on generators");
  return w;
}

/// Expand prod_i 1/(1-e_{v_i})^{m_i} up to weight D. The coefficient at every
/// point of weight <= D is the exact number of ways to write it as an
/// N-combination of the factors.
inline TruncatedSeries expand_product(
    const std::vector<std::pair<MonoidElement, int>>& factors, const WeightFunctional& weight,
    long long bound) {
  if (bound < 0) throw std::invalid_argument("expand_product: negative bound");
  const int rank = static_cast<int>(weight.coeffs.size());
  TruncatedSeries acc;
  acc.rank = rank;
  acc.weight = weight;
  acc.bound = bound;
  acc.add(MonoidElement(rank, 0), 1);
  for (const auto& [v, mult] : factors) {
    const long long w = weight(v);
    if (w < 1)
      throw std::invalid_argument("expand_product: factor of weight < 1");
    if (mult < 1) throw std::invalid_argument("expand_product: nonpositive multiplicity");
    // 1/(1-e_v)^m = sum_k C(k+m-1, m-1) e_{kv}
    TruncatedSeries geo;
    geo.rank = rank;
    geo.weight = weight;
    geo.bound = bound;
    for (long long k = 0; k * w <= bound; ++k) {
      MonoidElement kv(v.size());
      for (size_t i = 0; i < v.size(); ++i) kv[i] = k * v[i];
      geo.add(kv, binomial(static_cast<unsigned long>(k + mult - 1),
                           static_cast<unsigned long>(mult - 1)));
    }
    acc = convolve(acc, geo);
  }
  return acc;
}

/// Expand a rational expression (numerator times geometric factors).
inline TruncatedSeries expand(const RationalSeriesExpr& expr, const WeightFunctional& weight,
                              long long bound) {
  TruncatedSeries prod = expand_product(expr.denominator_factors, weight, bound);
  TruncatedSeries num;
  num.rank = expr.rank;
  num.weight = weight;
  num.bound = bound;
  for (const auto& [v, c] : expr.numerator.support) num.add(v, c);
  return convolve(prod, num);
}

/// Closed form of the Euler series from grouped orbit classes:
/// prod over distinct classes of 1/(1-e_class)^multiplicity.
inline RationalSeriesExpr euler_from_classes(const std::map<ClassVector, int>& grouped) {
  if (grouped.empty()) throw std::invalid_argument("euler_from_classes: empty grouping");
  const int rank = static_cast<int>(grouped.begin()->first.coords.size());
  RationalSeriesExpr expr;
  expr.rank = rank;
  expr.numerator = delta_zero(rank);
  for (const auto& [cls, mult] : grouped) {
    if (static_cast<int>(cls.coords.size()) != rank)
      throw std::invalid_argument("euler_from_classes: mixed ranks");
    expr.denominator_factors.emplace_back(cls.coords, mult);
  }
  return expr;
}

/// Equivariant Euler series: the class monoid of invariant cycles is free on
/// the orbit classes, so the series is prod_{i<N} 1/(1-e_{u_i}) over Z^N.
inline RationalSeriesExpr equivariant_series(int num_orbits) {
  if (num_orbits < 1) throw std::invalid_argument("equivariant_series: need at least one orbit");
  RationalSeriesExpr expr;
  expr.rank = num_orbits;
  expr.numerator = delta_zero(num_orbits);
  for (int i = 0; i < num_orbits; ++i) {
    MonoidElement u(num_orbits, 0);
    u[i] = 1;
    expr.denominator_factors.emplace_back(std::move(u), 1);
  }
  return expr;
}

/// Pushforward along the class projection: sums equivariant coefficients over
/// each fiber beta -> sum_i beta_i * class_i. The equivariant series must be
/// expanded with per-orbit weights weight(class_i) to the same bound, so its
/// truncation covers every fiber below the bound.
inline TruncatedSeries pushforward_J(const TruncatedSeries& series_t,
                                     const std::vector<MonoidElement>& classes,
                                     const WeightFunctional& weight, long long bound) {
  const size_t n_orbits = classes.size();
  if (series_t.rank != static_cast<int>(n_orbits))
    throw std::invalid_argument("pushforward: orbit count mismatch");
  if (series_t.bound != bound)
    throw std::invalid_argument("pushforward: expansion bound mismatch");
  if (series_t.weight.coeffs.size() != n_orbits)
    throw std::invalid_argument("pushforward: weight rank mismatch");
  for (size_t i = 0; i < n_orbits; ++i)
    if (series_t.weight.coeffs[i] != weight(classes[i]))
      throw std::invalid_argument("pushforward: equivariant weights do not match the classes");
  const size_t r = weight.coeffs.size();
  TruncatedSeries out;
  out.rank = static_cast<int>(r);
  out.weight = weight;
  out.bound = bound;
  for (const auto& [beta, c] : series_t.support) {
    MonoidElement lambda(r, 0);
    for (size_t i = 0; i < n_orbits; ++i)
      for (size_t j = 0; j < r; ++j) lambda[j] += beta[i] * classes[i][j];
    out.add(lambda, c);
  }
  return out;
}

/// Render a monoid point multiplicatively, e.g. "t1^2*t3^-1" or "1".
inline std::string element_to_string(const MonoidElement& v, const std::string& stem = "t") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += stem + std::to_string(i + 1);
    if (v[i] != 1) s += "^" + std::to_string(v[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string closed_form_to_string(const RationalSeriesExpr& expr,
                                         const std::string& stem = "t") {
  std::string s;
  for (const auto& [v, m] : expr.denominator_factors) {
    if (!s.empty()) s += " * ";
    s += "(1/(1-" + element_to_string(v, stem) + "))";
    if (m != 1) s += "^" + std::to_string(m);
  }
  if (s.empty()) s = "1";
  return s;
}

}  // namespace toric
