#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "transverse/plane.hpp"
#include "transverse/rat.hpp"
#include "transverse/transversal.hpp"

namespace transverse {

using nlohmann::json;

/// Whole file as bytes; InputError if it cannot be read.
std::string read_file(const std::string& path);
/// InputError if it cannot be written.
void write_file(const std::string& path, std::string_view content);

/// InputError naming `what` on malformed JSON.
json parse_json(std::string_view text, const std::string& what);

/// Rationals travel as strings ("-7/3"); JSON integers are accepted too.
Rat rat_from_json(const json& j, const std::string& what);
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, std::size_t dim, const std::string& what);

/// {m, St, ST, d} with 1-based coordinate indices.
PlaneFamily family_from_json(const json& j);
json family_to_json(const PlaneFamily& f);

/// Family fields plus basepoint and extra_dirs.
ConcretePlane plane_from_json(const json& j);
json plane_to_json(const ConcretePlane& p);

/// Array of point lists; every point must have length m.
std::vector<PointSet> sets_from_json(const json& j, std::size_t m);
json sets_to_json(const std::vector<PointSet>& sets);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace transverse
