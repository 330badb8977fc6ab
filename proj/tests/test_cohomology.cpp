#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "toric/builtins.hpp"
#include "toric/cohomology.hpp"

using namespace toric;

static std::vector<Fan> builtin_fans() {
  return {gen_pn(1),           gen_pn(2),           gen_pn(3),
          gen_product_pn_pm(1, 1), gen_product_pn_pm(2, 1), gen_blowup_pn(2),
          gen_blowup_pn(3),    gen_hirzebruch(1),   gen_hirzebruch(2),
          gen_hirzebruch(3)};
}

TEST_CASE("P2 presentation matches the hand computation") {
  CohomologyPresentation pres = build_presentation(gen_pn(2));
  REQUIRE(pres.sr_generators.size() == 1);
  CHECK(to_string(pres.sr_generators[0]) == "t1*t2*t3");
  REQUIRE(pres.linear_generators.size() == 2);
  CHECK(to_string(pres.linear_generators[0]) == "t1 - t3");
  CHECK(to_string(pres.linear_generators[1]) == "t2 - t3");
  CHECK(cohomology_rank(pres, 0) == 1);
  CHECK(cohomology_rank(pres, 1) == 1);
  CHECK(cohomology_rank(pres, 2) == 1);
  CHECK_THROWS_AS(cohomology_rank(pres, 3), std::out_of_range);
}

TEST_CASE("Hirzebruch presentation matches the hand computation") {
  CohomologyPresentation pres = build_presentation(gen_hirzebruch(2));
  REQUIRE(pres.sr_generators.size() == 2);
  CHECK(to_string(pres.sr_generators[0]) == "t1*t3");
  CHECK(to_string(pres.sr_generators[1]) == "t2*t4");
  REQUIRE(pres.linear_generators.size() == 2);
  CHECK(to_string(pres.linear_generators[0]) == "t1 - t3");
  CHECK(to_string(pres.linear_generators[1]) == "t2 + 2*t3 - t4");
  CHECK(cohomology_rank(pres, 1) == 2);
  // basis of degree 1 is {t3, t4} in degrevlex order
  REQUIRE(pres.basis_by_degree[1].size() == 2);
  CHECK(monomial_to_string(pres.basis_by_degree[1][0]) == "t3");
  CHECK(monomial_to_string(pres.basis_by_degree[1][1]) == "t4");
}

TEST_CASE("blow-up linear relations identify s2 ~ s3 and s1 ~ s3 + s4") {
  CohomologyPresentation pres = build_presentation(gen_blowup_pn(2));
  // normal forms: t2 - t3 and t1 - t3 - t4 reduce to zero
  Polynomial d(4);
  d += Polynomial::variable(4, 1) - Polynomial::variable(4, 2);
  CHECK(normal_form(d, pres.gb).is_zero());
  Polynomial e(4);
  e += Polynomial::variable(4, 0) - Polynomial::variable(4, 2) - Polynomial::variable(4, 3);
  CHECK(normal_form(e, pres.gb).is_zero());
}

TEST_CASE("orbit classes of P2 all coincide") {
  CohomologyPresentation pres = build_presentation(gen_pn(2));
  for (const auto& cone : enumerate_cones(pres.fan, 1)) {
    const ClassVector& cls = orbit_class(pres, cone);
    REQUIRE(cls.coords.size() == 1);
    CHECK(cls.coords[0] == 1);
  }
  const auto& table = orbit_class_table(pres, 1);
  REQUIRE(table.grouped.size() == 1);
  CHECK(table.grouped.begin()->second == 3);
}

TEST_CASE("orbit classes of the Hirzebruch surface") {
  CohomologyPresentation pres = build_presentation(gen_hirzebruch(2));
  auto cls = [&](int ray) { return orbit_class(pres, Cone{{ray}}).coords; };
  CHECK(cls(0) == std::vector<long long>{1, 0});   // e1 ~ t3
  CHECK(cls(2) == std::vector<long long>{1, 0});   // e3
  CHECK(cls(3) == std::vector<long long>{0, 1});   // e4 ~ t4
  CHECK(cls(1) == std::vector<long long>{-2, 1});  // e2 ~ t4 - 2 t3

  const auto& table = orbit_class_table(pres, 1);
  REQUIRE(table.grouped.size() == 3);
  std::map<std::vector<long long>, int> grouped;
  for (const auto& [c, m] : table.grouped) grouped[c.coords] = m;
  CHECK(grouped[{1, 0}] == 2);
  CHECK(grouped[{0, 1}] == 1);
  CHECK(grouped[{-2, 1}] == 1);

  const auto& points = orbit_class_table(pres, 2);
  REQUIRE(points.grouped.size() == 1);
  CHECK(points.grouped.begin()->second == 4);
}

TEST_CASE("degree-0 table is the trivial class") {
  CohomologyPresentation pres = build_presentation(gen_pn(1));
  const auto& table = orbit_class_table(pres, 0);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].cone.ray_indices.empty());
  CHECK(table.rows[0].cls.coords == std::vector<long long>{1});
}

TEST_CASE("unknown cone is rejected") {
  CohomologyPresentation pres = build_presentation(gen_blowup_pn(2));
  CHECK_THROWS_AS(orbit_class(pres, Cone{{0, 3}}), std::invalid_argument);
}

TEST_CASE("build_presentation refuses invalid fans") {
  Fan incomplete = make_fan(2, {RayVector{{1, 0}}, RayVector{{0, 1}}, RayVector{{-1, -1}}},
                            {Cone{{0, 1}}, Cone{{1, 2}}});
  CHECK_THROWS_AS(build_presentation(incomplete), PresentationError);
}

TEST_CASE("ranks equal the h-vector for all builtin fans") {
  for (const Fan& fan : builtin_fans()) {
    CohomologyPresentation pres = build_presentation(fan);
    auto h = oracle::h_vector(f_vector(fan), fan.dim);
    for (int p = 0; p <= fan.dim; ++p) {
      CHECK(toric::make_integer(cohomology_rank(pres, p)) == h[p]);
      CHECK(cohomology_rank(pres, p) == cohomology_rank(pres, fan.dim - p));
    }
  }
}

TEST_CASE("orbit tables: multiplicities add up, monomials distinct, classes integral") {
  for (const Fan& fan : builtin_fans()) {
    CohomologyPresentation pres = build_presentation(fan);
    for (int p = 0; p <= fan.dim; ++p) {
      const auto& table = orbit_class_table(pres, p);
      long long total = 0;
      for (const auto& [cls, mult] : table.grouped) total += mult;
      CHECK(total == static_cast<long long>(enumerate_cones(fan, p).size()));
      CHECK(table.rows.size() == enumerate_cones(fan, p).size());
      std::set<std::vector<unsigned>> monos;
      for (const auto& row : table.rows) {
        monos.insert(row.equivariant_monomial.exps);
        CHECK(row.equivariant_monomial.degree() == static_cast<unsigned>(p));
        for (unsigned e : row.equivariant_monomial.exps) CHECK(e <= 1);
      }
      CHECK(monos.size() == table.rows.size());
    }
  }
}
