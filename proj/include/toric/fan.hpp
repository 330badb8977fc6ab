#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

/// Primitive lattice point spanning a 1-dimensional cone.
struct RayVector {
  std::vector<long long> coords;

  bool operator==(const RayVector& o) const { return coords == o.coords; }
  bool operator<(const RayVector& o) const { return coords < o.coords; }
};

/// A cone of the fan, identified by the strictly increasing list of indices
/// of its spanning rays. The empty list is the trivial cone {0}.
struct Cone {
  std::vector<int> ray_indices;

  int dim() const { return static_cast<int>(ray_indices.size()); }
  bool operator==(const Cone& o) const { return ray_indices == o.ray_indices; }
  bool operator<(const Cone& o) const { return ray_indices < o.ray_indices; }
};

struct Fan {
  int dim = 0;
  std::vector<RayVector> rays;
  std::vector<Cone> max_cones;
};

enum class FanErrorKind {
  malformed_syntax,
  non_primitive_ray,
  out_of_range_cone_index,
  duplicate_cone_index,
  duplicate_ray,
  unused_ray,
};

class FanError : public std::runtime_error {
 public:
  FanError(FanErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  FanErrorKind kind() const { return kind_; }

 private:
  FanErrorKind kind_;
};

namespace detail {

inline long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string format_indices(const std::vector<int>& ix) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < ix.size(); ++i) os << (i ? "," : "") << ix[i];
  os << "}";
  return os.str();
}

inline IntMatrix ray_matrix(const Fan& fan, const std::vector<int>& ray_indices) {
  IntMatrix m;
  m.reserve(ray_indices.size());
  for (int i : ray_indices) {
    std::vector<Integer> row;
    row.reserve(fan.dim);
    for (long long c : fan.rays[i].coords) row.push_back(make_integer(c));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

/// Structural construction: bounds checks, primitivity, ray usage. Geometric
/// validation (smoothness, completeness) is a separate step.
inline Fan make_fan(int dim, std::vector<RayVector> rays, std::vector<Cone> max_cones) {
  if (dim < 1) throw FanError(FanErrorKind::malformed_syntax, "dim must be >= 1");
  if (rays.empty()) throw FanError(FanErrorKind::malformed_syntax, "fan has no rays");
  if (max_cones.empty()) throw FanError(FanErrorKind::malformed_syntax, "fan has no maximal cones");
  for (size_t i = 0; i < rays.size(); ++i) {
    const auto& r = rays[i].coords;
    if (static_cast<int>(r.size()) != dim)
      throw FanError(FanErrorKind::malformed_syntax,
                     "ray " + std::to_string(i) + " has wrong length");
    long long g = 0;
    for (long long c : r) g = detail::gcd_ll(g, c);
    if (g != 1)
      throw FanError(FanErrorKind::non_primitive_ray,
                     "ray " + std::to_string(i) + (g == 0 ? " is zero" : " is not primitive") +
                         " (gcd " + std::to_string(g) + ")");
  }
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == rays[j])
        throw FanError(FanErrorKind::duplicate_ray,
                       "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  std::vector<bool> used(rays.size(), false);
  for (auto& cone : max_cones) {
    for (int ix : cone.ray_indices) {
      if (ix < 0 || ix >= static_cast<int>(rays.size()))
        throw FanError(FanErrorKind::out_of_range_cone_index,
                       "cone index " + std::to_string(ix) + " out of range");
      used[ix] = true;
    }
    std::sort(cone.ray_indices.begin(), cone.ray_indices.end());
    if (std::adjacent_find(cone.ray_indices.begin(), cone.ray_indices.end()) !=
        cone.ray_indices.end())
      throw FanError(FanErrorKind::duplicate_cone_index,
                     "cone " + detail::format_indices(cone.ray_indices) + " repeats an index");
  }
  for (size_t i = 0; i < rays.size(); ++i)
    if (!used[i])
      throw FanError(FanErrorKind::unused_ray,
                     "ray " + std::to_string(i) + " appears in no maximal cone");
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
  return Fan{dim, std::move(rays), std::move(max_cones)};
}

struct Violation {
  enum class Kind { not_simplicial, not_smooth, not_complete, fan_property } kind;
  std::string detail;
};

struct ValidationReport {
  bool simplicial = true;
  bool smooth = true;
  bool complete = true;
  std::vector<Violation> violations;

  bool ok() const { return simplicial && smooth && complete; }
};

/// Geometric validation: simpliciality, smoothness, the fan (face) property,
/// and a combinatorial completeness certificate (pure + every wall is shared
/// by exactly two maximal cones lying on opposite sides).
inline ValidationReport validate_fan(const Fan& fan) {
  ValidationReport rep;
  const size_t n = static_cast<size_t>(fan.dim);

  for (const auto& cone : fan.max_cones) {
    auto m = detail::ray_matrix(fan, cone.ray_indices);
    bool independent = true;
    if (cone.ray_indices.size() > n) {
      independent = false;
    } else if (!cone.ray_indices.empty()) {
      // rank check via gcd of maximal minors (0 means all minors vanish)
      independent = maximal_minor_gcd(m, n) != 0;
    }
    if (!independent) {
      rep.simplicial = false;
      rep.smooth = false;
      rep.violations.push_back({Violation::Kind::not_simplicial,
                                "maximal cone " + detail::format_indices(cone.ray_indices) +
                                    " has linearly dependent rays"});
      continue;
    }
    if (cone.ray_indices.size() == n) {
      Integer d = determinant(m);
      if (d != 1 && d != -1) {
        rep.smooth = false;
        rep.violations.push_back({Violation::Kind::not_smooth,
                                  "maximal cone " + detail::format_indices(cone.ray_indices) +
                                      " has |det| = " + Integer(abs(d)).get_str()});
      }
    } else {
      Integer g = maximal_minor_gcd(m, n);
      if (g != 1) {
        rep.smooth = false;
        rep.violations.push_back({Violation::Kind::not_smooth,
                                  "maximal cone " + detail::format_indices(cone.ray_indices) +
                                      " does not extend to a lattice basis (minor gcd " +
                                      g.get_str() + ")"});
      }
    }
  }

  // Completeness certificate, meaningful only for simplicial fans.
  bool pure = true;
  for (const auto& cone : fan.max_cones) {
    if (cone.dim() != fan.dim) {
      pure = false;
      rep.complete = false;
      rep.violations.push_back({Violation::Kind::not_complete,
                                "maximal cone " + detail::format_indices(cone.ray_indices) +
                                    " has dimension " + std::to_string(cone.dim()) +
                                    " < " + std::to_string(fan.dim)});
    }
  }
  if (!rep.simplicial) {
    rep.complete = false;
    rep.violations.push_back({Violation::Kind::not_complete,
                              "completeness certificate requires a simplicial fan"});
  }
  if (rep.simplicial && pure) {
    // wall -> incident (max cone position, opposite ray index)
    std::map<std::vector<int>, std::vector<std::pair<size_t, int>>> walls;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
      const auto& ix = fan.max_cones[c].ray_indices;
      for (size_t drop = 0; drop < ix.size(); ++drop) {
        std::vector<int> wall;
        wall.reserve(ix.size() - 1);
        for (size_t k = 0; k < ix.size(); ++k)
          if (k != drop) wall.push_back(ix[k]);
        walls[wall].emplace_back(c, ix[drop]);
      }
    }
    for (const auto& [wall, incident] : walls) {
      if (incident.size() != 2) {
        rep.complete = false;
        rep.violations.push_back({Violation::Kind::not_complete,
                                  "wall " + detail::format_indices(wall) + " borders " +
                                      std::to_string(incident.size()) +
                                      " maximal cone(s), expected 2"});
        continue;
      }
      auto w = hyperplane_normal(detail::ray_matrix(fan, wall), n);
      Integer s0 = 0, s1 = 0;
      for (size_t j = 0; j < n; ++j) {
        s0 += w[j] * make_integer(fan.rays[incident[0].second].coords[j]);
        s1 += w[j] * make_integer(fan.rays[incident[1].second].coords[j]);
      }
      if (sgn(s0) * sgn(s1) >= 0) {
        rep.complete = false;
        rep.violations.push_back({Violation::Kind::not_complete,
                                  "wall " + detail::format_indices(wall) +
                                      " does not separate its two maximal cones"});
      }
    }
  }

  // Fan property: any two maximal cones intersect in a common face. For
  // simplicial cones this holds iff a hyperplane separates the two cones and
  // vanishes exactly on their common rays.
  if (rep.simplicial) {
    for (size_t a = 0; a < fan.max_cones.size(); ++a) {
      for (size_t b = a + 1; b < fan.max_cones.size(); ++b) {
        const auto& ca = fan.max_cones[a].ray_indices;
        const auto& cb = fan.max_cones[b].ray_indices;
        std::vector<int> shared;
        std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                              std::back_inserter(shared));
        std::vector<LinearConstraint> ineqs, eqs;
        auto ray_row = [&](int ray) {
          std::vector<Rational> row(n);
          for (size_t j = 0; j < n; ++j) row[j] = Rational(make_integer(fan.rays[ray].coords[j]));
          return row;
        };
        for (int r : shared) eqs.push_back({ray_row(r), Rational(0)});
        for (int r : ca)
          if (!std::binary_search(shared.begin(), shared.end(), r))
            ineqs.push_back({ray_row(r), Rational(1)});
        for (int r : cb)
          if (!std::binary_search(shared.begin(), shared.end(), r)) {
            auto row = ray_row(r);
            for (auto& v : row) v = -v;
            ineqs.push_back({std::move(row), Rational(1)});
          }
        if (!feasible_point(n, std::move(ineqs), std::move(eqs))) {
          rep.complete = false;
          rep.violations.push_back({Violation::Kind::fan_property,
                                    "maximal cones " + detail::format_indices(ca) + " and " +
                                        detail::format_indices(cb) +
                                        " do not meet in a common face"});
        }
      }
    }
  }
  return rep;
}

/// All d-dimensional cones of the fan (faces of maximal cones), deduplicated,
/// in lexicographic order on ray indices. d = 0 gives the trivial cone.
inline std::vector<Cone> enumerate_cones(const Fan& fan, int d) {
  if (d < 0 || d > fan.dim) throw std::out_of_range("cone dimension out of range");
  std::set<std::vector<int>> seen;
  for (const auto& cone : fan.max_cones) {
    const auto& ix = cone.ray_indices;
    const int k = cone.dim();
    if (d > k) continue;
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    while (true) {
      std::vector<int> face(d);
      for (int i = 0; i < d; ++i) face[i] = ix[pick[i]];
      seen.insert(face);
      int i = d;
      while (i > 0 && pick[i - 1] == k - d + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (int j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::vector<Cone> out;
  out.reserve(seen.size());
  for (auto& f : seen) out.push_back(Cone{f});
  return out;
}

/// True iff the given rays jointly span a face of some maximal cone.
inline bool is_cone_of_fan(const Fan& fan, const std::set<int>& ray_set) {
  for (int ix : ray_set)
    if (ix < 0 || ix >= static_cast<int>(fan.rays.size()))
      throw std::out_of_range("ray index out of range");
  for (const auto& cone : fan.max_cones) {
    if (std::includes(cone.ray_indices.begin(), cone.ray_indices.end(), ray_set.begin(),
                      ray_set.end()))
      return true;
  }
  return false;
}

/// f-vector entry counts: f[d] = number of d-dimensional cones, d = 0..dim.
inline std::vector<long long> f_vector(const Fan& fan) {
  std::vector<long long> f(fan.dim + 1);
  for (int d = 0; d <= fan.dim; ++d) f[d] = static_cast<long long>(enumerate_cones(fan, d).size());
  return f;
}

}  // namespace toric
