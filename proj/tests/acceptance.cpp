// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Expected values come from the oracles in oracles.hpp (Pascal binomials,
// explicit partition enumeration) rather than from the library's own
// arithmetic. Exits nonzero when any criterion fails.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "toric/builtins.hpp"
#include "toric/cohomology.hpp"
#include "toric/groebner.hpp"
#include "toric/series.hpp"

using namespace toric;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  double limit_seconds;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream detail;

  Criterion(std::string l, double limit) : label(std::move(l)), limit_seconds(limit) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    failed: " << what << "\n";
    }
  }

  void finish() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= limit_seconds) {
      ok = false;
      detail << "    failed: runtime " << secs << " s exceeds " << limit_seconds << " s\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << label << "  (" << secs << " s)\n"
              << detail.str();
    if (!ok) ++g_failures;
  }
};

std::vector<std::pair<std::string, Fan>> builtin_family() {
  return {{"pn 1", gen_pn(1)},
          {"pn 2", gen_pn(2)},
          {"pn 3", gen_pn(3)},
          {"product 1 1", gen_product_pn_pm(1, 1)},
          {"product 2 1", gen_product_pn_pm(2, 1)},
          {"product 2 2", gen_product_pn_pm(2, 2)},
          {"blowup-pn 2", gen_blowup_pn(2)},
          {"blowup-pn 3", gen_blowup_pn(3)},
          {"hirzebruch 1", gen_hirzebruch(1)},
          {"hirzebruch 2", gen_hirzebruch(2)},
          {"hirzebruch 3", gen_hirzebruch(3)}};
}

WeightFunctional grading_for(const OrbitClassTable& table) {
  std::vector<MonoidElement> generators;
  for (const auto& [cls, mult] : table.grouped) generators.push_back(cls.coords);
  return find_positive_functional(generators);
}

// ---------------------------------------------------------------------------
// 1. P^n: E_p = (1/(1-t))^C(n+1,p); expansion = stars and bars; dimension
//    convention dictionary.
void criterion_1() {
  Criterion c("criterion 1: P^n closed forms, expansions, dimension dictionary", 5.0);
  for (int n = 1; n <= 5; ++n) {
    CohomologyPresentation pres = build_presentation(gen_pn(n));
    for (int p = 0; p <= n; ++p) {
      const std::string tag = "P^" + std::to_string(n) + " p=" + std::to_string(p);
      const auto& table = orbit_class_table(pres, p);
      const Integer expected = oracle::binomial(n + 1, p);
      c.require(table.grouped.size() == 1, tag + ": one class expected");
      if (table.grouped.size() != 1) continue;
      c.require(make_integer(table.grouped.begin()->second) == expected,
                tag + ": exponent C(n+1,p)");

      WeightFunctional w = grading_for(table);
      auto series = expand(euler_from_classes(table.grouped), w, 6);
      const MonoidElement gen = table.grouped.begin()->first.coords;
      std::set<MonoidElement> expected_support;
      for (long long d = 0; d <= 6; ++d) {
        MonoidElement v(gen.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = d * gen[i];
        if (w(v) <= 6) expected_support.insert(v);
        else continue;
        c.require(series.at(v) == oracle::stars_and_bars(to_int64(expected), d),
                  tag + ": coefficient at d=" + std::to_string(d));
      }
      for (const auto& [v, coeff] : series.support)
        c.require(expected_support.count(v) == 1, tag + ": stray support element");
    }
    // Intro dictionary: the dimension-p series is the codimension n-p one,
    // with exponent C(n+1, p+1).
    for (int p = 0; p < n; ++p) {
      const auto& grouped = orbit_class_table(pres, n - p).grouped;
      c.require(grouped.size() == 1 &&
                    make_integer(grouped.begin()->second) == oracle::binomial(n + 1, p + 1),
                "P^" + std::to_string(n) + " dim " + std::to_string(p) +
                    ": exponent C(n+1,p+1)");
    }
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 2. P^n x P^m: factors (class of t_{k,l})^{C(n+1,k) C(m+1,l)}.
void criterion_2() {
  Criterion c("criterion 2: P^n x P^m class multisets", 10.0);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
    Fan fan = gen_product_pn_pm(n, m);
    CohomologyPresentation pres = build_presentation(fan);
    std::set<int> first_factor;
    for (int i = 0; i < n; ++i) first_factor.insert(i);
    first_factor.insert(n + m);
    for (int p = 0; p <= n + m; ++p) {
      const std::string tag = "P^" + std::to_string(n) + "xP^" + std::to_string(m) +
                              " p=" + std::to_string(p);
      const auto& table = orbit_class_table(pres, p);
      // the (k,l) split of a cone determines its class, and the number of
      // cones with a given split is C(n+1,k) C(m+1,l)
      std::map<std::pair<int, int>, std::set<std::vector<long long>>> split_classes;
      std::map<std::pair<int, int>, long long> split_counts;
      for (const auto& row : table.rows) {
        int k = 0;
        for (int ix : row.cone.ray_indices) k += first_factor.count(ix) ? 1 : 0;
        split_classes[{k, p - k}].insert(row.cls.coords);
        split_counts[{k, p - k}] += 1;
      }
      std::set<std::vector<long long>> all;
      int expected_splits = 0;
      for (int k = std::max(0, p - m); k <= std::min(n, p); ++k) {
        ++expected_splits;
        const int l = p - k;
        c.require(split_counts[{k, l}] != 0, tag + ": split missing");
        c.require(make_integer(split_counts[{k, l}]) ==
                      oracle::binomial(n + 1, k) * oracle::binomial(m + 1, l),
                  tag + ": multiplicity of split (" + std::to_string(k) + "," +
                      std::to_string(l) + ")");
        c.require(split_classes[{k, l}].size() == 1, tag + ": split class not unique");
        for (const auto& cls : split_classes[{k, l}])
          c.require(all.insert(cls).second, tag + ": classes of distinct splits collide");
      }
      c.require(static_cast<int>(table.grouped.size()) == expected_splits,
                tag + ": number of distinct classes");
    }
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 3. Blow-up of P^n: groups C(n,p), C(n,p-1), C(n,p-1) with the product
//    relation; p = n checked against the orbit count 2n (the printed C(n+2,p)
//    of the source text contradicts its own product formula and is only
//    reported).
void criterion_3() {
  Criterion c("criterion 3: blow-up of P^n groupings and p=n orbit count", 5.0);
  for (int n : {2, 3}) {
    Fan fan = gen_blowup_pn(n);
    CohomologyPresentation pres = build_presentation(fan);
    for (int p = 1; p < n; ++p) {
      const std::string tag = "Bl P^" + std::to_string(n) + " p=" + std::to_string(p);
      const auto& grouped = orbit_class_table(pres, p).grouped;
      c.require(grouped.size() == 3, tag + ": three classes");
      if (grouped.size() != 3) continue;
      std::vector<std::pair<std::vector<long long>, Integer>> cl;
      for (const auto& [cls, mult] : grouped) cl.push_back({cls.coords, make_integer(mult)});
      const Integer m_main = oracle::binomial(n, p), m_side = oracle::binomial(n, p - 1);
      bool found = false;
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
          for (size_t x = 0; x < 3; ++x) {
            if (a == b || b == x || a == x) continue;
            std::vector<long long> sum(cl[a].first.size());
            for (size_t j = 0; j < sum.size(); ++j) sum[j] = cl[a].first[j] + cl[b].first[j];
            if (cl[a].second == m_main && cl[b].second == m_side && cl[x].second == m_side &&
                sum == cl[x].first)
              found = true;
          }
      c.require(found, tag + ": multiplicities C(n,p), C(n,p-1), C(n,p-1) with t1*t2 relation");
    }
    const auto& points = orbit_class_table(pres, n).grouped;
    c.require(points.size() == 1 &&
                  points.begin()->second == static_cast<int>(fan.max_cones.size()) &&
                  fan.max_cones.size() == 2u * static_cast<unsigned>(n),
              "Bl P^" + std::to_string(n) + " p=n: single class with orbit count 2n");
    c.detail << "    note: Bl P^" << n << " p=" << n << " exponent is "
             << fan.max_cones.size() << "; the stated C(n+2,p) would be "
             << oracle::binomial(n + 2, n).get_str() << "\n";
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 4. Hirzebruch surfaces a in {1,2,3}.
void criterion_4() {
  Criterion c("criterion 4: Hirzebruch E_2, E_1, E_0", 2.0);
  for (long long a : {1, 2, 3}) {
    const std::string tag = "H_" + std::to_string(a);
    CohomologyPresentation pres = build_presentation(gen_hirzebruch(a));
    const auto& e2 = orbit_class_table(pres, 2).grouped;
    c.require(e2.size() == 1 && e2.begin()->second == 4, tag + ": E_2 = (1/(1-t))^4");
    const auto& e1 = orbit_class_table(pres, 1).grouped;
    std::map<std::vector<long long>, int> got;
    for (const auto& [cls, mult] : e1) got[cls.coords] = mult;
    std::map<std::vector<long long>, int> want = {{{1, 0}, 2}, {{0, 1}, 1}, {{-a, 1}, 1}};
    c.require(got == want, tag + ": E_1 grouped classes");
    const auto& e0 = orbit_class_table(pres, 0).grouped;
    c.require(e0.size() == 1 && e0.begin()->second == 1, tag + ": E_0 = 1/(1-t)");
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 5. J(E_p^T) = E_p at D = 4 for every builtin fan and codimension, with 0/1
//    equivariant coefficients.
void criterion_5() {
  Criterion c("criterion 5: equivariant pushforward identity at D=4", 10.0);
  for (const auto& [name, fan] : builtin_family()) {
    CohomologyPresentation pres = build_presentation(fan);
    for (int p = 0; p <= fan.dim; ++p) {
      const std::string tag = name + " p=" + std::to_string(p);
      const auto& table = orbit_class_table(pres, p);
      WeightFunctional w = grading_for(table);
      auto euler = expand(euler_from_classes(table.grouped), w, 4);

      std::vector<MonoidElement> classes;
      WeightFunctional orbit_w;
      for (const auto& row : table.rows) {
        classes.push_back(row.cls.coords);
        orbit_w.coeffs.push_back(w(row.cls.coords));
      }
      auto series_t =
          expand(equivariant_series(static_cast<int>(classes.size())), orbit_w, 4);
      for (const auto& [v, coeff] : series_t.support)
        c.require(coeff == 0 || coeff == 1, tag + ": equivariant coefficient in {0,1}");
      auto pushed = pushforward_J(series_t, classes, w, 4);
      c.require(pushed.support == euler.support, tag + ": J(E^T) = E");
    }
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 6. Zero-cycles: codim-n series is 1/(1-t)^{#maximal cones}.
void criterion_6() {
  Criterion c("criterion 6: zero-cycles match chi(X) = #maximal cones", 2.0);
  for (const auto& [name, fan] : builtin_family()) {
    CohomologyPresentation pres = build_presentation(fan);
    const auto& grouped = orbit_class_table(pres, fan.dim).grouped;
    c.require(grouped.size() == 1 &&
                  grouped.begin()->second == static_cast<int>(fan.max_cones.size()),
              name + ": single point class with multiplicity #maximal cones");
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 7. Property suites: Groebner S-pairs, convolution ring axioms, brute-force
//    oracle equivalence at D = 6, h-vector ranks.
void criterion_7() {
  Criterion c("criterion 7: property suites", 30.0);

  for (const auto& [name, fan] : builtin_family()) {
    CohomologyPresentation pres = build_presentation(fan);
    const auto& gens = pres.gb.generators;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        c.require(normal_form(s_polynomial(gens[i], gens[j]), pres.gb).is_zero(),
                  name + ": S-polynomial reduces to zero");

    auto h = oracle::h_vector(f_vector(fan), fan.dim);
    for (int p = 0; p <= fan.dim; ++p)
      c.require(make_integer(cohomology_rank(pres, p)) == h[p],
                name + ": rank equals h_" + std::to_string(p));
  }

  std::mt19937 rng(1789);
  std::uniform_int_distribution<int> rank_dist(1, 3), nterms(0, 8);
  std::uniform_int_distribution<long long> coord(-3, 3), val(-9, 9);
  auto random_element = [&](int rank) {
    FiniteSupportFunction f;
    f.rank = rank;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      MonoidElement v(rank);
      for (auto& x : v) x = coord(rng);
      f.add(v, make_integer(val(rng)));
    }
    return f;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = rank_dist(rng);
    auto a = random_element(rank), b = random_element(rank), x = random_element(rank);
    c.require(convolve(a, b) == convolve(b, a), "convolution commutativity");
    c.require(convolve(convolve(a, b), x) == convolve(a, convolve(b, x)),
              "convolution associativity");
    auto sum = a;
    for (const auto& [v, coeff] : b.support) sum.add(v, coeff);
    auto lhs = convolve(a, x);
    for (const auto& [v, coeff] : convolve(b, x).support) lhs.add(v, coeff);
    c.require(convolve(sum, x) == lhs, "convolution distributivity");
    c.require(convolve(a, delta_zero(rank)) == a, "delta_0 is the identity");
  }

  for (const auto& [name, fan] : builtin_family()) {
    CohomologyPresentation pres = build_presentation(fan);
    for (int p = 0; p <= fan.dim; ++p) {
      const auto& table = orbit_class_table(pres, p);
      WeightFunctional w = grading_for(table);
      auto series = expand(euler_from_classes(table.grouped), w, 6);
      std::vector<MonoidElement> slots;
      std::vector<long long> weights;
      for (const auto& row : table.rows) {
        slots.push_back(row.cls.coords);
        weights.push_back(w(row.cls.coords));
      }
      auto brute = oracle::enumerate_partitions(slots, weights, 6);
      bool match = true;
      for (const auto& [v, coeff] : brute)
        if (series.at(v) != coeff) match = false;
      for (const auto& [v, coeff] : series.support)
        if (brute[v] != coeff) match = false;
      c.require(match, name + " p=" + std::to_string(p) + ": brute-force oracle equivalence");
      for (const auto& [v, coeff] : series.support)
        c.require(w(v) <= 6, name + ": support exceeds the weight bound");
    }
  }

  c.finish();
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criterion(s) failed\n";
  return 1;
}
