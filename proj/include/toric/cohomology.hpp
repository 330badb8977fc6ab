#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/groebner.hpp"
#include "toric/linalg.hpp"
#include "toric/polynomial.hpp"

namespace toric {

struct PresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer coordinates of a cohomology class of codimension degree_p, in the
/// lattice basis chosen for that degree.
struct ClassVector {
  int degree_p = 0;
  std::vector<long long> coords;

  bool operator==(const ClassVector& o) const {
    return degree_p == o.degree_p && coords == o.coords;
  }
  bool operator<(const ClassVector& o) const {
    if (degree_p != o.degree_p) return degree_p < o.degree_p;
    return coords < o.coords;
  }
};

struct OrbitRow {
  Cone cone;
  Monomial equivariant_monomial;  // square-free product of the cone's ray variables
  ClassVector cls;
};

struct OrbitClassTable {
  int p = 0;
  std::vector<OrbitRow> rows;
  std::map<ClassVector, int> grouped;  // distinct class -> number of p-cones
};

/// Basis data for one graded piece: the integral coordinates are taken with
/// respect to the lattice spanned by the orbit classes, whose basis vectors
/// are the rows of hnf divided by denom, in standard-monomial coordinates.
struct DegreeClassBasis {
  IntMatrix hnf;
  Integer denom = 1;
};

struct CohomologyPresentation {
  Fan fan;
  std::vector<Polynomial> sr_generators;      // minimal non-faces of the fan
  std::vector<Polynomial> linear_generators;  // one form per lattice coordinate
  GroebnerBasis gb;
  std::vector<std::vector<Monomial>> basis_by_degree;  // degrees 0..n
  std::vector<DegreeClassBasis> class_basis;           // degrees 0..n
  std::vector<OrbitClassTable> tables;                 // degrees 0..n
};

namespace detail {

inline std::vector<std::vector<int>> minimal_non_faces(const Fan& fan) {
  const int k = static_cast<int>(fan.rays.size());
  std::vector<std::vector<int>> result;
  std::set<std::vector<int>> faces_prev;  // faces of size s-1
  faces_prev.insert(std::vector<int>{});
  for (int s = 1; s <= fan.dim + 1 && s <= k; ++s) {
    std::set<std::vector<int>> faces_cur;
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      // minimal non-face: not a face, every facet of it is
      bool all_subsets_faces = true;
      for (int drop = 0; drop < s && all_subsets_faces; ++drop) {
        std::vector<int> sub;
        for (int i = 0; i < s; ++i)
          if (i != drop) sub.push_back(pick[i]);
        all_subsets_faces = faces_prev.count(sub) > 0;
      }
      if (all_subsets_faces) {
        if (is_cone_of_fan(fan, std::set<int>(pick.begin(), pick.end())))
          faces_cur.insert(pick);
        else if (s >= 2)
          result.push_back(pick);
      }
      int i = s;
      while (i > 0 && pick[i - 1] == k - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (int j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    faces_prev = std::move(faces_cur);
  }
  return result;
}

// Rational coordinates of a homogeneous normal form in the standard-monomial
// basis of its degree.
inline std::vector<Rational> coords_in_basis(const Polynomial& nf,
                                             const std::vector<Monomial>& basis) {
  std::vector<Rational> out(basis.size(), Rational(0));
  for (const auto& [m, c] : nf.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end())
      throw PresentationError("normal form contains a non-standard monomial " +
                              monomial_to_string(m));
    out[it - basis.begin()] = c;
  }
  return out;
}

}  // namespace detail

/// Build the cohomology presentation Z[t_1..t_K] / (I_SR + I_lin) of a smooth
/// complete fan: Groebner basis, graded monomial bases, and the orbit class
/// table of every codimension.
inline CohomologyPresentation build_presentation(const Fan& fan) {
  ValidationReport rep = validate_fan(fan);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "fan is not smooth and complete:";
    for (const auto& v : rep.violations) os << "\n  " << v.detail;
    throw PresentationError(os.str());
  }
  CohomologyPresentation pres;
  pres.fan = fan;
  const int k = static_cast<int>(fan.rays.size());
  const int n = fan.dim;

  for (const auto& nf : detail::minimal_non_faces(fan)) {
    Monomial m = monomial_one(k);
    for (int ix : nf) m.exps[ix] = 1;
    pres.sr_generators.push_back(Polynomial::from_monomial(k, m));
  }
  for (int i = 0; i < n; ++i) {
    Polynomial form(k);
    for (int j = 0; j < k; ++j)
      form += Polynomial::variable(k, j, Rational(make_integer(fan.rays[j].coords[i])));
    pres.linear_generators.push_back(std::move(form));
  }

  std::vector<Polynomial> gens = pres.sr_generators;
  gens.insert(gens.end(), pres.linear_generators.begin(), pres.linear_generators.end());
  pres.gb = buchberger(gens);

  long long total_rank = 0;
  for (int p = 0; p <= n; ++p) {
    pres.basis_by_degree.push_back(standard_monomials(pres.gb, p));
    total_rank += static_cast<long long>(pres.basis_by_degree.back().size());
  }
  if (pres.basis_by_degree[0].size() != 1)
    throw PresentationError("degree-0 piece does not have rank 1");
  if (total_rank != static_cast<long long>(fan.max_cones.size()))
    throw PresentationError("total cohomology rank differs from the number of maximal cones");

  for (int p = 0; p <= n; ++p) {
    const auto& basis = pres.basis_by_degree[p];
    const size_t r = basis.size();
    OrbitClassTable table;
    table.p = p;
    std::vector<std::vector<Rational>> rational_rows;
    for (const auto& cone : enumerate_cones(fan, p)) {
      Monomial m = monomial_one(k);
      for (int ix : cone.ray_indices) m.exps[ix] = 1;
      Polynomial nf = normal_form(Polynomial::from_monomial(k, m), pres.gb);
      if (nf.is_zero())
        throw PresentationError("orbit closure " + detail::format_indices(cone.ray_indices) +
                                " has vanishing cohomology class");
      rational_rows.push_back(detail::coords_in_basis(nf, basis));
      table.rows.push_back({cone, m, ClassVector{p, {}}});
    }

    // Integral coordinates: Hermite basis of the lattice the classes span.
    std::vector<Rational> flat;
    for (const auto& row : rational_rows) flat.insert(flat.end(), row.begin(), row.end());
    DegreeClassBasis cb;
    cb.denom = common_denominator(flat);
    IntMatrix m_int;
    for (const auto& row : rational_rows) {
      std::vector<Integer> scaled(r);
      for (size_t j = 0; j < r; ++j) {
        Rational v = row[j] * Rational(cb.denom);
        scaled[j] = v.get_num();  // exact: denominators divide cb.denom
      }
      m_int.push_back(std::move(scaled));
    }
    cb.hnf = hermite_normal_form(m_int);
    if (cb.hnf.size() != r)
      throw PresentationError("orbit classes do not span the degree-" + std::to_string(p) +
                              " cohomology");
    std::vector<std::vector<long long>> coords(m_int.size());
    for (size_t row = 0; row < m_int.size(); ++row) {
      std::vector<Integer> x = hnf_solve(cb.hnf, m_int[row]);
      coords[row].reserve(r);
      for (const auto& v : x) coords[row].push_back(to_int64(v));
    }
    // Orient each basis vector toward the effective classes: when a
    // coordinate is nonpositive across all orbit classes, flip it.
    for (size_t j = 0; j < r; ++j) {
      bool has_negative = false, all_nonpositive = true;
      for (const auto& row : coords) {
        if (row[j] > 0) all_nonpositive = false;
        if (row[j] < 0) has_negative = true;
      }
      if (all_nonpositive && has_negative) {
        for (auto& row : coords) row[j] = -row[j];
        for (auto& h : cb.hnf[j]) h = -h;
      }
    }
    for (size_t row = 0; row < coords.size(); ++row) {
      table.rows[row].cls.coords = std::move(coords[row]);
      table.grouped[table.rows[row].cls] += 1;
    }
    pres.class_basis.push_back(std::move(cb));
    pres.tables.push_back(std::move(table));
  }
  return pres;
}

inline int cohomology_rank(const CohomologyPresentation& pres, int p) {
  if (p < 0 || p > pres.fan.dim) throw std::out_of_range("codimension out of range");
  return static_cast<int>(pres.basis_by_degree[p].size());
}

/// Class of the orbit closure of a cone, as integer coordinates in the
/// degree-dim(cone) lattice basis.
inline const ClassVector& orbit_class(const CohomologyPresentation& pres, const Cone& cone) {
  std::vector<int> ix = cone.ray_indices;
  std::sort(ix.begin(), ix.end());
  const int p = static_cast<int>(ix.size());
  if (p > pres.fan.dim) throw std::invalid_argument("cone not in fan");
  for (const auto& row : pres.tables[p].rows)
    if (row.cone.ray_indices == ix) return row.cls;
  throw std::invalid_argument("cone " + detail::format_indices(ix) + " not in fan");
}

inline const OrbitClassTable& orbit_class_table(const CohomologyPresentation& pres, int p) {
  if (p < 0 || p > pres.fan.dim) throw std::out_of_range("codimension out of range");
  return pres.tables[p];
}

}  // namespace toric
