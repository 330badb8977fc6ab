#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "toric/fan.hpp"

namespace toric {

/// Parse the fan file format: {"dim": n, "rays": [[..],..], "max_cones":
/// [[..],..]} with 0-based ray indices. Unknown keys are rejected.
inline Fan parse_fan(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FanError(FanErrorKind::malformed_syntax, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FanError(FanErrorKind::malformed_syntax, "fan file must be an object");
  for (const auto& item : j.items()) {
    if (item.key() != "dim" && item.key() != "rays" && item.key() != "max_cones")
      throw FanError(FanErrorKind::malformed_syntax, "unknown key \"" + item.key() + "\"");
  }
  if (!j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
    throw FanError(FanErrorKind::malformed_syntax, "missing one of dim/rays/max_cones");
  if (!j["dim"].is_number_integer())
    throw FanError(FanErrorKind::malformed_syntax, "dim must be an integer");
  const int dim = j["dim"].get<int>();

  auto int_matrix = [](const nlohmann::json& arr, const char* what) {
    if (!arr.is_array())
      throw FanError(FanErrorKind::malformed_syntax, std::string(what) + " must be an array");
    std::vector<std::vector<long long>> out;
    for (const auto& row : arr) {
      if (!row.is_array())
        throw FanError(FanErrorKind::malformed_syntax,
                       std::string(what) + " entries must be arrays");
      std::vector<long long> r;
      for (const auto& v : row) {
        if (!v.is_number_integer())
          throw FanError(FanErrorKind::malformed_syntax,
                         std::string(what) + " entries must be integers");
        r.push_back(v.get<long long>());
      }
      out.push_back(std::move(r));
    }
    return out;
  };

  std::vector<RayVector> rays;
  for (auto& row : int_matrix(j["rays"], "rays")) rays.push_back(RayVector{std::move(row)});
  std::vector<Cone> cones;
  for (auto& row : int_matrix(j["max_cones"], "max_cones")) {
    std::vector<int> ix;
    ix.reserve(row.size());
    for (long long v : row) {
      if (v < INT32_MIN || v > INT32_MAX)
        throw FanError(FanErrorKind::out_of_range_cone_index, "cone index out of range");
      ix.push_back(static_cast<int>(v));
    }
    cones.push_back(Cone{std::move(ix)});
  }
  return make_fan(dim, std::move(rays), std::move(cones));
}

inline nlohmann::json fan_to_json(const Fan& fan) {
  nlohmann::json j;
  j["dim"] = fan.dim;
  j["rays"] = nlohmann::json::array();
  for (const auto& r : fan.rays) j["rays"].push_back(r.coords);
  j["max_cones"] = nlohmann::json::array();
  for (const auto& c : fan.max_cones) j["max_cones"].push_back(c.ray_indices);
  return j;
}

}  // namespace toric
