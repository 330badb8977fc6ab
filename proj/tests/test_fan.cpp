#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "toric/builtins.hpp"
#include "toric/fan.hpp"
#include "toric/fan_json.hpp"

using namespace toric;

static const char* kP2 = R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]})";

TEST_CASE("parse_fan accepts the P2 fan") {
  Fan fan = parse_fan(kP2);
  CHECK(fan.dim == 2);
  CHECK(fan.rays.size() == 3);
  CHECK(fan.max_cones.size() == 3);
}

TEST_CASE("parse_fan accepts the P1 fan") {
  Fan fan = parse_fan(R"({"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]})");
  CHECK(fan.dim == 1);
  CHECK(fan.rays.size() == 2);
}

TEST_CASE("parse_fan rejects bad input") {
  auto kind_of = [](const char* text) {
    try {
      parse_fan(text);
    } catch (const FanError& e) {
      return e.kind();
    }
    throw std::logic_error("expected FanError");
  };
  CHECK(kind_of(R"({"dim":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]})") ==
        FanErrorKind::non_primitive_ray);
  CHECK(kind_of(R"({"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,5]]})") ==
        FanErrorKind::out_of_range_cone_index);
  CHECK(kind_of(R"({"dim":2,"rays":[[1,0],[1,0],[0,1]],"max_cones":[[0,1],[1,2]]})") ==
        FanErrorKind::duplicate_ray);
  CHECK(kind_of(R"(not json)") == FanErrorKind::malformed_syntax);
  CHECK(kind_of(R"({"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1]],"extra":1})") ==
        FanErrorKind::malformed_syntax);
  CHECK(kind_of(R"({"dim":2,"rays":[[1,0],[0,1]]})") == FanErrorKind::malformed_syntax);
  CHECK(kind_of(R"({"dim":2,"rays":[[1.5,0],[0,1]],"max_cones":[[0,1]]})") ==
        FanErrorKind::malformed_syntax);
  CHECK(kind_of(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,0],[1,2],[0,2]]})") ==
        FanErrorKind::duplicate_cone_index);
  CHECK(kind_of(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1]]})") ==
        FanErrorKind::unused_ray);
  CHECK(kind_of(R"({"dim":2,"rays":[[0,0],[0,1],[1,0]],"max_cones":[[0,1,2]]})") ==
        FanErrorKind::non_primitive_ray);
}

TEST_CASE("fan json round-trips through parse") {
  Fan fan = gen_hirzebruch(2);
  Fan back = parse_fan(fan_to_json(fan).dump());
  CHECK(back.dim == fan.dim);
  CHECK(back.rays.size() == fan.rays.size());
  CHECK(back.max_cones.size() == fan.max_cones.size());
  for (size_t i = 0; i < fan.max_cones.size(); ++i)
    CHECK(back.max_cones[i].ray_indices == fan.max_cones[i].ray_indices);
}

TEST_CASE("validate_fan passes the P2 fan") {
  ValidationReport rep = validate_fan(parse_fan(kP2));
  CHECK(rep.simplicial);
  CHECK(rep.smooth);
  CHECK(rep.complete);
  CHECK(rep.violations.empty());
}

TEST_CASE("validate_fan flags a non-smooth cone with its determinant") {
  // cone spanned by (1,0) and (1,2) has determinant 2
  Fan fan = parse_fan(
      R"({"dim":2,"rays":[[1,0],[1,2],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]})");
  ValidationReport rep = validate_fan(fan);
  CHECK(rep.simplicial);
  CHECK(!rep.smooth);
  bool has_det_witness = false;
  for (const auto& v : rep.violations)
    if (v.kind == Violation::Kind::not_smooth && v.detail.find("det| = 2") != std::string::npos)
      has_det_witness = true;
  CHECK(has_det_witness);
}

TEST_CASE("validate_fan flags incompleteness with a wall witness") {
  Fan fan = parse_fan(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2]]})");
  ValidationReport rep = validate_fan(fan);
  CHECK(rep.smooth);
  CHECK(!rep.complete);
  bool has_wall_witness = false;
  for (const auto& v : rep.violations)
    if (v.kind == Violation::Kind::not_complete &&
        v.detail.find("borders 1 maximal cone") != std::string::npos)
      has_wall_witness = true;
  CHECK(has_wall_witness);
}

TEST_CASE("validate_fan flags overlapping cones via the face property") {
  // two 2-cones overlap: cone((1,0),(0,1)) and cone((1,1),(-1,2)) intersect
  // in a 2-dimensional region, not in a common face
  Fan fan = make_fan(2,
                     {RayVector{{1, 0}}, RayVector{{0, 1}}, RayVector{{1, 1}},
                      RayVector{{-1, 2}}},
                     {Cone{{0, 1}}, Cone{{2, 3}}});
  ValidationReport rep = validate_fan(fan);
  bool fan_property_violated = false;
  for (const auto& v : rep.violations)
    if (v.kind == Violation::Kind::fan_property) fan_property_violated = true;
  CHECK(fan_property_violated);
}

TEST_CASE("validate_fan flags a low-dimensional maximal cone as incomplete") {
  Fan fan = make_fan(2, {RayVector{{1, 0}}, RayVector{{0, 1}}, RayVector{{-1, -1}}},
                     {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2}}});
  ValidationReport rep = validate_fan(fan);
  CHECK(!rep.complete);
  bool has_pure_witness = false;
  for (const auto& v : rep.violations)
    if (v.detail.find("dimension 1 < 2") != std::string::npos) has_pure_witness = true;
  CHECK(has_pure_witness);
}

TEST_CASE("validate_fan flags a non-saturated low-dimensional cone") {
  // rays (1,0,1) and (1,2,1) span a rank-2 sublattice of index 2
  Fan fan = make_fan(3, {RayVector{{1, 0, 1}}, RayVector{{1, 2, 1}}}, {Cone{{0, 1}}});
  ValidationReport rep = validate_fan(fan);
  CHECK(rep.simplicial);
  CHECK(!rep.smooth);
  bool has_witness = false;
  for (const auto& v : rep.violations)
    if (v.detail.find("does not extend to a lattice basis") != std::string::npos)
      has_witness = true;
  CHECK(has_witness);
}

TEST_CASE("validate_fan flags a dependent maximal cone as non-simplicial") {
  Fan fan = make_fan(2, {RayVector{{1, 0}}, RayVector{{-1, 0}}, RayVector{{0, 1}}},
                     {Cone{{0, 1, 2}}});
  ValidationReport rep = validate_fan(fan);
  CHECK(!rep.simplicial);
  CHECK(!rep.smooth);
  // the completeness certificate only applies to simplicial fans
  CHECK(!rep.complete);
}

TEST_CASE("enumerate_cones on P2") {
  Fan fan = parse_fan(kP2);
  auto dim0 = enumerate_cones(fan, 0);
  REQUIRE(dim0.size() == 1);
  CHECK(dim0[0].ray_indices.empty());
  auto dim1 = enumerate_cones(fan, 1);
  REQUIRE(dim1.size() == 3);
  CHECK(dim1[0].ray_indices == std::vector<int>{0});
  CHECK(dim1[1].ray_indices == std::vector<int>{1});
  CHECK(dim1[2].ray_indices == std::vector<int>{2});
  CHECK(enumerate_cones(fan, 2).size() == 3);
  CHECK_THROWS_AS(enumerate_cones(fan, 3), std::out_of_range);
  CHECK_THROWS_AS(enumerate_cones(fan, -1), std::out_of_range);
}

TEST_CASE("enumerate_cones on the Hirzebruch surface") {
  Fan fan = gen_hirzebruch(2);
  CHECK(enumerate_cones(fan, 2).size() == 4);
  CHECK(enumerate_cones(fan, 1).size() == 4);
}

TEST_CASE("cones are closed under faces and deduplicated") {
  for (const Fan& fan : {gen_pn(3), gen_blowup_pn(3), gen_product_pn_pm(2, 1)}) {
    for (int d = 0; d <= fan.dim; ++d) {
      auto cones = enumerate_cones(fan, d);
      std::set<std::vector<int>> unique_cones;
      for (const auto& c : cones) unique_cones.insert(c.ray_indices);
      CHECK(unique_cones.size() == cones.size());
      // every facet of every d-cone shows up in dimension d-1
      if (d == 0) continue;
      auto lower = enumerate_cones(fan, d - 1);
      std::set<std::vector<int>> lower_set;
      for (const auto& c : lower) lower_set.insert(c.ray_indices);
      for (const auto& c : cones) {
        for (size_t drop = 0; drop < c.ray_indices.size(); ++drop) {
          std::vector<int> facet;
          for (size_t i = 0; i < c.ray_indices.size(); ++i)
            if (i != drop) facet.push_back(c.ray_indices[i]);
          CHECK(lower_set.count(facet) == 1);
        }
      }
    }
  }
}

TEST_CASE("is_cone_of_fan") {
  Fan p2 = parse_fan(kP2);
  CHECK(is_cone_of_fan(p2, {0, 1}));
  CHECK(is_cone_of_fan(p2, {}));
  CHECK(!is_cone_of_fan(p2, {0, 1, 2}));
  Fan bl = gen_blowup_pn(2);
  CHECK(!is_cone_of_fan(bl, {0, 3}));  // e_1 and -e_1 span no cone
  CHECK(is_cone_of_fan(bl, {1, 3}));
  CHECK_THROWS_AS(is_cone_of_fan(p2, {0, 9}), std::out_of_range);
}

TEST_CASE("f-vector consistency for the builtin fans") {
  for (const Fan& fan : {gen_pn(2), gen_pn(3), gen_product_pn_pm(1, 1), gen_product_pn_pm(2, 1),
                         gen_blowup_pn(2), gen_blowup_pn(3), gen_hirzebruch(1), gen_hirzebruch(2),
                         gen_hirzebruch(3)}) {
    auto f = f_vector(fan);
    CHECK(f[0] == 1);
    CHECK(f[fan.dim] == static_cast<long long>(fan.max_cones.size()));
    auto h = oracle::h_vector(f, fan.dim);
    for (const auto& entry : h) CHECK(entry >= 0);
  }
}
