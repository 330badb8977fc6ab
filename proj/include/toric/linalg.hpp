#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Nonzero integer normal of the hyperplane spanned by n-1 independent rows
/// in Z^n, computed from signed maximal minors. Returns the zero vector when
/// the rows are dependent.
inline std::vector<Integer> hyperplane_normal(const IntMatrix& rows, size_t n) {
  if (rows.size() + 1 != n) throw std::invalid_argument("hyperplane_normal: need n-1 rows");
  std::vector<Integer> w(n);
  for (size_t skip = 0; skip < n; ++skip) {
    IntMatrix minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<Integer> mr;
      mr.reserve(n - 1);
      for (size_t j = 0; j < n; ++j)
        if (j != skip) mr.push_back(r[j]);
      minor.push_back(std::move(mr));
    }
    Integer d = determinant(std::move(minor));
    w[skip] = (skip % 2 == 0) ? d : -d;
  }
  return w;
}

/// gcd of all k x k minors of a k x n integer matrix; equals 1 exactly when
/// the rows extend to a basis of Z^n.
inline Integer maximal_minor_gcd(const IntMatrix& rows, size_t n) {
  const size_t k = rows.size();
  if (k == 0) return 1;
  if (k > n) throw std::invalid_argument("maximal_minor_gcd: more rows than columns");
  std::vector<size_t> cols(k);
  for (size_t i = 0; i < k; ++i) cols[i] = i;
  Integer g = 0;
  while (true) {
    IntMatrix sub(k, std::vector<Integer>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = rows[i][cols[j]];
    Integer d = determinant(std::move(sub));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return 1;
    // next k-combination of {0..n-1}
    size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

/// Row Hermite normal form of an integer matrix: upper-echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped; the row lattice is preserved.
inline IntMatrix hermite_normal_form(IntMatrix m) {
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    // clear entries below position (row, col) by gcd steps
    while (true) {
      size_t pivot = m.size();
      for (size_t i = row; i < m.size(); ++i) {
        if (m[i][col] != 0 && (pivot == m.size() || cmp(abs(m[i][col]), abs(m[pivot][col])) < 0))
          pivot = i;
      }
      if (pivot == m.size()) break;  // column is zero below
      std::swap(m[row], m[pivot]);
      bool cleared = true;
      for (size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Integer q = m[i][col] / m[row][col];  // truncated division
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[row][col] == 0) continue;
    if (m[row][col] < 0)
      for (size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
    for (size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[row][col].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

struct NonIntegralCoordinate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solve x * H = y over Z for H a full-rank square HNF matrix. Throws
/// NonIntegralCoordinate when y is not in the row lattice of H.
inline std::vector<Integer> hnf_solve(const IntMatrix& h, const std::vector<Integer>& y) {
  const size_t r = h.size();
  if (r == 0) {
    if (!y.empty() && std::any_of(y.begin(), y.end(), [](const Integer& v) { return v != 0; }))
      throw NonIntegralCoordinate("nonzero vector in rank-0 lattice");
    return {};
  }
  if (h[0].size() != r) throw std::invalid_argument("hnf_solve: matrix not square");
  std::vector<Integer> x(r), acc(y);
  for (size_t j = 0; j < r; ++j) {
    Integer rem;
    mpz_tdiv_r(rem.get_mpz_t(), acc[j].get_mpz_t(), h[j][j].get_mpz_t());
    if (rem != 0)
      throw NonIntegralCoordinate("coordinate not integral over lattice basis");
    x[j] = acc[j] / h[j][j];
    for (size_t col = j; col < r; ++col) acc[col] -= x[j] * h[j][col];
  }
  for (size_t col = 0; col < r; ++col)
    if (acc[col] != 0) throw NonIntegralCoordinate("vector outside lattice span");
  return x;
}

/// One linear constraint a.x >= b.
struct LinearConstraint {
  std::vector<Rational> a;
  Rational b;
};

namespace detail {

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// Normalize so the first nonzero coefficient is +-1; dedup key.
inline void scale_constraint(LinearConstraint& c) {
  Rational lead = 0;
  for (const auto& v : c.a)
    if (v != 0) {
      lead = abs(v);
      break;
    }
  if (lead == 0 || lead == 1) return;
  for (auto& v : c.a) v /= lead;
  c.b /= lead;
}

}  // namespace detail

/// Exact Fourier-Motzkin feasibility for { x : a.x >= b for all constraints,
/// e.x == f for all equalities }. Returns a deterministic feasible point, or
/// nullopt. Equalities are eliminated by substitution first.
inline std::optional<std::vector<Rational>> feasible_point(
    size_t nvars, std::vector<LinearConstraint> ineqs,
    std::vector<LinearConstraint> eqs = {}) {
  // Gaussian elimination on the equalities: var -> expression in later state.
  // pivots[v] holds a constraint with a[v] == 1 used for back-substitution.
  std::vector<std::optional<LinearConstraint>> pivots(nvars);
  std::vector<LinearConstraint> work = std::move(eqs);
  for (auto& e : work) {
    // reduce against existing pivots
    for (size_t v = 0; v < nvars; ++v) {
      if (e.a[v] != 0 && pivots[v]) {
        Rational c = e.a[v];
        for (size_t j = 0; j < nvars; ++j) e.a[j] -= c * pivots[v]->a[j];
        e.b -= c * pivots[v]->b;
      }
    }
    size_t piv = nvars;
    for (size_t v = 0; v < nvars; ++v)
      if (e.a[v] != 0) {
        piv = v;
        break;
      }
    if (piv == nvars) {
      if (e.b != 0) return std::nullopt;  // inconsistent equality
      continue;
    }
    Rational c = e.a[piv];
    for (size_t j = 0; j < nvars; ++j) e.a[j] /= c;
    e.b /= c;
    pivots[piv] = e;
  }
  // substitute pivot variables out of the inequalities
  for (auto& c : ineqs) {
    for (size_t v = 0; v < nvars; ++v) {
      if (c.a[v] != 0 && pivots[v]) {
        Rational f = c.a[v];
        for (size_t j = 0; j < nvars; ++j) c.a[j] -= f * pivots[v]->a[j];
        c.b -= f * pivots[v]->b;
      }
    }
  }

  // Fourier-Motzkin over the remaining free variables, in index order.
  std::vector<size_t> free_vars;
  for (size_t v = 0; v < nvars; ++v)
    if (!pivots[v]) free_vars.push_back(v);

  struct Step {
    size_t var;
    std::vector<LinearConstraint> lowers, uppers;  // recorded for back-substitution
  };
  std::vector<Step> steps;
  std::vector<LinearConstraint> current = std::move(ineqs);
  for (size_t v : free_vars) {
    Step step;
    step.var = v;
    std::vector<LinearConstraint> next;
    for (auto& c : current) {
      if (c.a[v] > 0)
        step.lowers.push_back(c);
      else if (c.a[v] < 0)
        step.uppers.push_back(c);
      else
        next.push_back(c);
    }
    for (const auto& lo : step.lowers) {
      for (const auto& up : step.uppers) {
        LinearConstraint comb;
        comb.a.assign(nvars, Rational(0));
        Rational cl = -up.a[v];  // > 0
        Rational cu = lo.a[v];   // > 0
        for (size_t j = 0; j < nvars; ++j) comb.a[j] = cl * lo.a[j] + cu * up.a[j];
        comb.b = cl * lo.b + cu * up.b;
        detail::scale_constraint(comb);
        next.push_back(comb);
      }
    }
    // drop duplicates to tame growth
    std::sort(next.begin(), next.end(), [](const LinearConstraint& x, const LinearConstraint& y) {
      for (size_t j = 0; j < x.a.size(); ++j) {
        int c = cmp(x.a[j], y.a[j]);
        if (c != 0) return c < 0;
      }
      return cmp(x.b, y.b) < 0;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const LinearConstraint& x, const LinearConstraint& y) {
                             return x.a == y.a && x.b == y.b;
                           }),
               next.end());
    steps.push_back(std::move(step));
    current = std::move(next);
  }
  for (const auto& c : current)
    if (c.b > 0) return std::nullopt;  // 0 >= b with b > 0

  // Back-substitute: assign the last-eliminated variable first.
  std::vector<Rational> x(nvars, Rational(0));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::optional<Rational> lo_max, up_min;
    for (const auto& c : it->lowers) {
      Rational rest = c.b;
      for (size_t j = 0; j < nvars; ++j)
        if (j != it->var) rest -= c.a[j] * x[j];
      Rational bound = rest / c.a[it->var];
      if (!lo_max || bound > *lo_max) lo_max = bound;
    }
    for (const auto& c : it->uppers) {
      Rational rest = c.b;
      for (size_t j = 0; j < nvars; ++j)
        if (j != it->var) rest -= c.a[j] * x[j];
      Rational bound = rest / c.a[it->var];  // a[var] < 0 flips the inequality
      if (!up_min || bound < *up_min) up_min = bound;
    }
    if (lo_max)
      x[it->var] = *lo_max;
    else if (up_min)
      x[it->var] = *up_min;
  }
  // pivot variables from the equalities, in reverse pivot order
  for (size_t v = nvars; v-- > 0;) {
    if (!pivots[v]) continue;
    Rational val = pivots[v]->b;
    for (size_t j = 0; j < nvars; ++j)
      if (j != v) val -= pivots[v]->a[j] * x[j];
    x[v] = val;
  }
  return x;
}

}  // namespace toric
