#pragma once

// Distance-matrix documents:
//   {"points": 3, "d": ["3", "5", "4"]}
// `d` lists the upper triangle row-major, (0,1), (0,2), ..., (m-2,m-1). Each entry is a string
// holding an integer, a decimal or "p/q" (JSON integers are accepted too); parsing is exact.

#include "cayley/geometry.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace cayley {

inline nlohmann::json to_json(const DistanceMatrix& dm) {
  nlohmann::json d = nlohmann::json::array();
  for (const Rational& v : dm.upper()) d.push_back(to_string(v));
  return {{"points", dm.points()}, {"d", d}};
}

inline DistanceMatrix distance_matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "distance matrix document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "points" && key != "d") throw Error(ErrorCode::kParseError, "unknown field '" + key + "'");
  }
  if (!doc.contains("points") || !doc["points"].is_number_integer() || doc["points"].get<long long>() < 1) {
    throw Error(ErrorCode::kParseError, "'points' must be a positive integer");
  }
  if (!doc.contains("d") || !doc["d"].is_array()) throw Error(ErrorCode::kParseError, "'d' must be an array");
  const auto points = static_cast<std::size_t>(doc["points"].get<long long>());
  std::vector<Rational> upper;
  for (const auto& item : doc["d"]) {
    if (item.is_string()) {
      upper.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      upper.push_back(Rational(item.get<long long>()));
    } else {
      throw Error(ErrorCode::kParseError, "distance entries must be strings: " + item.dump());
    }
  }
  return DistanceMatrix(points, std::move(upper));
}

inline DistanceMatrix parse_distance_matrix(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return distance_matrix_from_json(doc);
}

inline DistanceMatrix read_distance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_distance_matrix(buffer.str());
}

}  // namespace cayley
