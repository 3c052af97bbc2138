#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "accordion_tau/geometry.hpp"
#include "accordion_tau/quiver.hpp"

// File formats. Dissections use white-vertex labels:
//   {"m": 6, "diagonals": [[0,2],[0,3],[0,4]]}
// Quivers name everything and read relations as "a then b is zero":
//   {"vertices": ["1","2"], "arrows": [{"id":"a","src":"1","tgt":"2"}],
//    "relations": [["a","b"]]}
namespace accordion_tau::serialize {

geometry::Dissection dissection_from_json(const nlohmann::json& j);
nlohmann::json to_json(const geometry::Dissection& d);

quiver::GentleQuiver quiver_from_json(const nlohmann::json& j);
nlohmann::json to_json(const quiver::GentleQuiver& q);

// Basis paths and every nonzero product, for auditing the algebra.
nlohmann::json algebra_dump(const quiver::AlgebraBasis& basis);

// "0-2,0-3,0-4" -> {(0,2),(0,3),(0,4)}. Throws Parse.
std::vector<std::pair<int, int>> parse_diagonals(std::string_view text);

// Parses text as JSON, turning syntax errors into Parse errors.
nlohmann::json parse_json(std::string_view text);

}  // namespace accordion_tau::serialize
