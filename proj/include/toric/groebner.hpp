#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// Reduced Groebner basis w.r.t. degrevlex: generators are monic, pairwise
/// inter-reduced, sorted by decreasing leading monomial.
struct GroebnerBasis {
  int nvars = 0;
  std::vector<Polynomial> generators;
};

/// Complete multivariate division remainder: no term of the result is
/// divisible by any leading monomial of the divisor list.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial work = p;
  Polynomial rem(p.nvars());
  while (!work.is_zero()) {
    const Monomial lm = work.leading_monomial();
    const Rational lc = work.leading_coefficient();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        const Monomial q = monomial_quotient(lm, g.leading_monomial());
        work -= g.times_term(q, lc / g.leading_coefficient());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      work.add_term(lm, Rational(-lc));
    }
  }
  return rem;
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars) throw std::invalid_argument("normal_form: variable-count mismatch");
  return normal_form(p, gb.generators);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(monomial_quotient(l, f.leading_monomial()),
                              Rational(1) / f.leading_coefficient());
  Polynomial b = g.times_term(monomial_quotient(l, g.leading_monomial()),
                              Rational(1) / g.leading_coefficient());
  return a - b;
}

namespace detail {

inline void make_monic(Polynomial& p) {
  if (!p.is_zero()) p *= Rational(1) / p.leading_coefficient();
}

// Reduce each generator against all the others until stable; drops zeros and
// leaves every generator monic. The result is the unique reduced basis of the
// same leading-term ideal.
inline std::vector<Polynomial> inter_reduce(std::vector<Polynomial> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Polynomial& p) { return p.is_zero(); }),
             gens.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(gens.size() - 1);
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      Polynomial r = normal_form(gens[i], others);
      make_monic(r);
      if (!(r == gens[i])) {
        changed = true;
        if (r.is_zero()) {
          gens.erase(gens.begin() + i);
          break;
        }
        gens[i] = std::move(r);
      }
    }
  }
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return degrevlex_less(b.leading_monomial(), a.leading_monomial());
  });
  return gens;
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first) and the coprime-leading-term criterion, followed by full
/// inter-reduction. Deterministic; the reduced basis is unique for the ideal,
/// so the result does not depend on generator order.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input) {
  int nvars = 0;
  for (const auto& p : input) {
    if (nvars == 0)
      nvars = p.nvars();
    else if (p.nvars() != nvars && p.nvars() != 0)
      throw std::invalid_argument("buchberger: variable-count mismatch");
  }
  std::vector<Polynomial> basis;
  for (const auto& p : input) {
    if (p.is_zero()) continue;
    Polynomial q = p;
    detail::make_monic(q);
    basis.push_back(std::move(q));
  }

  // pending S-pairs keyed for the normal strategy
  using PairKey = std::tuple<unsigned, Monomial, size_t, size_t>;
  auto key_less = [](const PairKey& a, const PairKey& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (!(std::get<1>(a) == std::get<1>(b)))
      return degrevlex_less(std::get<1>(a), std::get<1>(b));
    if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
    return std::get<3>(a) < std::get<3>(b);
  };
  std::set<PairKey, decltype(key_less)> queue(key_less);
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      const Monomial l = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.insert({l.degree(), l, i, j});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto [deg, l, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const Monomial prod =
        basis[i].leading_monomial() * basis[j].leading_monomial();
    if (l == prod) continue;  // coprime leading terms: S-pair reduces to zero
    Polynomial s = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (s.is_zero()) continue;
    detail::make_monic(s);
    basis.push_back(std::move(s));
    push_pairs(basis.size() - 1);
  }

  GroebnerBasis gb;
  gb.nvars = nvars;
  gb.generators = detail::inter_reduce(std::move(basis));
  return gb;
}

/// All degree-d monomials not divisible by any leading monomial of the basis,
/// in decreasing degrevlex order. These represent a basis of the degree-d
/// piece of the quotient ring.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned d) {
  const int k = gb.nvars;
  std::vector<Monomial> out;
  Monomial m = monomial_one(k);
  // enumerate all exponent vectors of total degree d
  auto rec = [&](auto&& self, int var, unsigned rest) -> void {
    if (var == k - 1) {
      m.exps[var] = rest;
      bool standard = true;
      for (const auto& g : gb.generators)
        if (g.leading_monomial().divides(m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(m);
      m.exps[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= rest; ++e) {
      m.exps[var] = e;
      self(self, var + 1, rest - e);
    }
    m.exps[var] = 0;
  };
  if (k > 0)
    rec(rec, 0, d);
  else if (d == 0)
    out.push_back(m);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); });
  return out;
}

}  // namespace toric
