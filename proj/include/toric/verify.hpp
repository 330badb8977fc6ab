#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toric/builtins.hpp"
#include "toric/cohomology.hpp"
#include "toric/series.hpp"

namespace toric {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

namespace verify_detail {

inline std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline std::string grouped_str(const std::map<ClassVector, int>& grouped) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [cls, mult] : grouped) {
    os << (first ? "" : " ") << vec_str(cls.coords) << "^" << mult;
    first = false;
  }
  return os.str();
}

struct Checker {
  std::vector<CheckResult>* out;
  std::string group;

  void emit(const std::string& name, bool pass, const std::string& expected,
            const std::string& actual) {
    out->push_back({group, name, pass, expected, actual});
  }
  void equal_int(const std::string& name, const Integer& expected, const Integer& actual) {
    emit(name, expected == actual, expected.get_str(), actual.get_str());
  }
};

// Euler-series data of one codimension: grouped classes plus an expansion.
struct SeriesData {
  std::map<ClassVector, int> grouped;
  WeightFunctional weight;
  TruncatedSeries expansion;
};

inline SeriesData series_data(const CohomologyPresentation& pres, int p, long long bound) {
  SeriesData d;
  d.grouped = orbit_class_table(pres, p).grouped;
  std::vector<MonoidElement> generators;
  for (const auto& [cls, mult] : d.grouped) generators.push_back(cls.coords);
  d.weight = find_positive_functional(generators);
  d.expansion = expand(euler_from_classes(d.grouped), d.weight, bound);
  return d;
}

inline void check_pn(std::vector<CheckResult>& out, int n) {
  Checker ck{&out, "pn"};
  CohomologyPresentation pres = build_presentation(gen_pn(n));
  for (int p = 0; p <= n; ++p) {
    const std::string tag = "P^" + std::to_string(n) + " p=" + std::to_string(p);
    SeriesData d = series_data(pres, p, 4);
    const Integer expected_mult = binomial(n + 1, p);
    bool single = d.grouped.size() == 1;
    Integer actual_mult = single ? make_integer(d.grouped.begin()->second) : Integer(-1);
    ck.emit(tag + " closed form", single && actual_mult == expected_mult,
            "(1/(1-t))^" + expected_mult.get_str(), grouped_str(d.grouped));
    if (!single) continue;
    const MonoidElement gen = d.grouped.begin()->first.coords;
    bool coeffs_ok = true;
    std::ostringstream exp_os, act_os;
    for (long long deg = 0; deg <= 4; ++deg) {
      MonoidElement v(gen.size());
      for (size_t i = 0; i < v.size(); ++i) v[i] = deg * gen[i];
      Integer expect = binomial(to_int64(expected_mult) + deg - 1, deg);
      Integer actual = d.expansion.at(v);
      exp_os << (deg ? "," : "") << expect.get_str();
      act_os << (deg ? "," : "") << actual.get_str();
      if (expect != actual) coeffs_ok = false;
    }
    ck.emit(tag + " expansion d=0..4", coeffs_ok, exp_os.str(), act_os.str());
  }
  // dimension <-> codimension dictionary: the codim n-p exponent is C(n+1,p+1)
  for (int p = 0; p < n; ++p) {
    const auto& grouped = orbit_class_table(pres, n - p).grouped;
    Integer actual =
        grouped.size() == 1 ? make_integer(grouped.begin()->second) : Integer(-1);
    ck.equal_int("P^" + std::to_string(n) + " dim-" + std::to_string(p) +
                     " exponent C(n+1,p+1)",
                 binomial(n + 1, p + 1), actual);
  }
}

inline void check_product(std::vector<CheckResult>& out, int n, int m) {
  Checker ck{&out, "product"};
  Fan fan = gen_product_pn_pm(n, m);
  CohomologyPresentation pres = build_presentation(fan);
  std::set<int> first_factor;
  for (int i = 0; i < n; ++i) first_factor.insert(i);
  first_factor.insert(n + m);
  for (int p = 0; p <= n + m; ++p) {
    const std::string tag =
        "P^" + std::to_string(n) + "xP^" + std::to_string(m) + " p=" + std::to_string(p);
    const auto& table = orbit_class_table(pres, p);
    // split each p-cone by how many rays come from each factor
    std::map<std::pair<int, int>, std::set<std::vector<long long>>> classes_by_split;
    std::map<std::pair<int, int>, int> count_by_split;
    for (const auto& row : table.rows) {
      int k = 0;
      for (int ix : row.cone.ray_indices) k += first_factor.count(ix) ? 1 : 0;
      int l = row.cone.dim() - k;
      classes_by_split[{k, l}].insert(row.cls.coords);
      count_by_split[{k, l}] += 1;
    }
    bool ok = true;
    std::ostringstream exp_os, act_os;
    std::set<std::vector<long long>> all_classes;
    for (int k = 0; k <= std::min(n, p); ++k) {
      int l = p - k;
      if (l > m) continue;
      Integer expect = binomial(n + 1, k) * binomial(m + 1, l);
      exp_os << " (" << k << "," << l << ")^" << expect.get_str();
      auto it = count_by_split.find({k, l});
      Integer actual = it == count_by_split.end() ? Integer(0) : make_integer(it->second);
      act_os << " (" << k << "," << l << ")^" << actual.get_str();
      if (expect != actual) ok = false;
      // all cones with the same split share one class, distinct across splits
      auto cit = classes_by_split.find({k, l});
      if (cit == classes_by_split.end() || cit->second.size() != 1) {
        ok = false;
        continue;
      }
      if (!all_classes.insert(*cit->second.begin()).second) ok = false;
    }
    if (table.grouped.size() != all_classes.size()) ok = false;
    ck.emit(tag + " class multiset", ok, exp_os.str(), act_os.str());
  }
}

inline void check_blowup(std::vector<CheckResult>& out, int n) {
  Checker ck{&out, "blowup"};
  Fan fan = gen_blowup_pn(n);
  CohomologyPresentation pres = build_presentation(fan);
  for (int p = 1; p < n; ++p) {
    const std::string tag = "Bl P^" + std::to_string(n) + " p=" + std::to_string(p);
    const auto& grouped = orbit_class_table(pres, p).grouped;
    const Integer m_t1 = binomial(n, p), m_rest = binomial(n, p - 1);
    std::string expected = "t1^" + m_t1.get_str() + " t1t2^" + m_rest.get_str() + " t2^" +
                           m_rest.get_str() + " with t1t2 = t1 + t2";
    bool ok = grouped.size() == 3;
    if (ok) {
      std::vector<std::pair<std::vector<long long>, int>> cl(grouped.size());
      size_t i = 0;
      for (const auto& [c, mult] : grouped) cl[i++] = {c.coords, mult};
      auto add = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> s(a.size());
        for (size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
        return s;
      };
      bool found = false;
      for (size_t a = 0; a < 3 && !found; ++a)
        for (size_t b = 0; b < 3 && !found; ++b)
          for (size_t c = 0; c < 3 && !found; ++c) {
            if (a == b || b == c || a == c) continue;
            if (make_integer(cl[a].second) == m_t1 && make_integer(cl[b].second) == m_rest &&
                make_integer(cl[c].second) == m_rest && add(cl[a].first, cl[b].first) == cl[c].first)
              found = true;
          }
      ok = found;
    }
    ck.emit(tag + " grouping", ok, expected, grouped_str(grouped));
  }
  // p = n: the closed form has one factor whose exponent is the number of
  // fixed points, i.e. #maximal cones = 2n. The binomial C(n+2,n) sometimes
  // quoted for this case contradicts the product formula (6 vs 4 for n = 2).
  const auto& points = orbit_class_table(pres, n).grouped;
  bool ok = points.size() == 1 && points.begin()->second == static_cast<int>(fan.max_cones.size()) &&
            fan.max_cones.size() == 2 * static_cast<size_t>(n);
  std::ostringstream exp_os;
  exp_os << "single class ^" << 2 * n;
  ck.emit("Bl P^" + std::to_string(n) + " p=" + std::to_string(n) + " exponent 2n=" +
              std::to_string(2 * n) + " (the sometimes-quoted C(n+2,n)=" +
              binomial(n + 2, n).get_str() + " contradicts the product formula)",
          ok, exp_os.str(), grouped_str(points));
}

inline void check_hirzebruch(std::vector<CheckResult>& out, long long a) {
  Checker ck{&out, "hirzebruch"};
  CohomologyPresentation pres = build_presentation(gen_hirzebruch(a));
  const std::string tag = "H_" + std::to_string(a);

  const auto& e2 = orbit_class_table(pres, 2).grouped;
  ck.emit(tag + " E_2", e2.size() == 1 && e2.begin()->second == 4, "(1/(1-t))^4",
          grouped_str(e2));

  const auto& e1 = orbit_class_table(pres, 1).grouped;
  std::map<std::vector<long long>, int> got;
  for (const auto& [c, mult] : e1) got[c.coords] = mult;
  std::map<std::vector<long long>, int> want = {{{1, 0}, 2}, {{0, 1}, 1}, {{-a, 1}, 1}};
  ck.emit(tag + " E_1", got == want, "(1,0)^2 (0,1)^1 (-" + std::to_string(a) + ",1)^1",
          grouped_str(e1));

  const auto& e0 = orbit_class_table(pres, 0).grouped;
  ck.emit(tag + " E_0", e0.size() == 1 && e0.begin()->second == 1, "(1/(1-t))^1",
          grouped_str(e0));
}

inline std::vector<std::pair<std::string, Fan>> builtin_family() {
  return {{"pn 1", gen_pn(1)},
          {"pn 2", gen_pn(2)},
          {"pn 3", gen_pn(3)},
          {"product 1 1", gen_product_pn_pm(1, 1)},
          {"product 2 1", gen_product_pn_pm(2, 1)},
          {"blowup-pn 2", gen_blowup_pn(2)},
          {"blowup-pn 3", gen_blowup_pn(3)},
          {"hirzebruch 1", gen_hirzebruch(1)},
          {"hirzebruch 2", gen_hirzebruch(2)},
          {"hirzebruch 3", gen_hirzebruch(3)}};
}

inline void check_equivariant(std::vector<CheckResult>& out) {
  Checker ck{&out, "equivariant"};
  for (const auto& [name, fan] : builtin_family()) {
    CohomologyPresentation pres = build_presentation(fan);
    std::string failure;
    for (int p = 0; p <= fan.dim && failure.empty(); ++p) {
      SeriesData d = series_data(pres, p, 4);
      const auto& table = orbit_class_table(pres, p);
      std::vector<MonoidElement> classes;
      WeightFunctional orbit_w;
      for (const auto& row : table.rows) {
        classes.push_back(row.cls.coords);
        orbit_w.coeffs.push_back(d.weight(row.cls.coords));
      }
      auto series_t = expand(equivariant_series(static_cast<int>(classes.size())), orbit_w, 4);
      for (const auto& [v, c] : series_t.support)
        if (c != 0 && c != 1) failure = "equivariant coefficient not 0/1 at p=" + std::to_string(p);
      auto pushed = pushforward_J(series_t, classes, d.weight, 4);
      if (!(pushed.support == d.expansion.support))
        failure = "J(E^T) != E at p=" + std::to_string(p);
    }
    ck.emit("J(E^T)=E [" + name + "]", failure.empty(), "identical expansions at D=4",
            failure.empty() ? "identical expansions at D=4" : failure);
  }
}

inline void check_zero_cycles(std::vector<CheckResult>& out) {
  Checker ck{&out, "zero-cycles"};
  for (const auto& [name, fan] : builtin_family()) {
    CohomologyPresentation pres = build_presentation(fan);
    const auto& grouped = orbit_class_table(pres, fan.dim).grouped;
    const int chi = static_cast<int>(fan.max_cones.size());
    ck.emit("E at codim n [" + name + "]",
            grouped.size() == 1 && grouped.begin()->second == chi,
            "(1/(1-t))^" + std::to_string(chi), grouped_str(grouped));
  }
}

}  // namespace verify_detail

/// Recompute the worked examples (projective spaces, products, blow-ups,
/// Hirzebruch surfaces), the pushforward identity, and the zero-cycle count.
/// `only` restricts to one group: pn, product, blowup, hirzebruch,
/// equivariant, zero-cycles.
inline std::vector<CheckResult> run_example_checks(const std::string& only = "") {
  std::vector<CheckResult> out;
  auto want = [&](const char* group) { return only.empty() || only == group; };
  if (want("pn"))
    for (int n = 1; n <= 3; ++n) verify_detail::check_pn(out, n);
  if (want("product")) {
    verify_detail::check_product(out, 1, 1);
    verify_detail::check_product(out, 2, 1);
  }
  if (want("blowup")) {
    verify_detail::check_blowup(out, 2);
    verify_detail::check_blowup(out, 3);
  }
  if (want("hirzebruch"))
    for (long long a : {1, 2, 3}) verify_detail::check_hirzebruch(out, a);
  if (want("equivariant")) verify_detail::check_equivariant(out);
  if (want("zero-cycles")) verify_detail::check_zero_cycles(out);
  return out;
}

}  // namespace toric
