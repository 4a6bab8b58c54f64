#include "transverse/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "transverse/errors.hpp"

namespace transverse {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("failed writing file '" + path + "'");
}

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": malformed JSON (" + e.what() + ")");
  }
}

Rat rat_from_json(const json& j, const std::string& what) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(what + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  throw InputError(what + ": expected a rational string");
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_text(x));
  return out;
}

Vec vec_from_json(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array() || j.size() != dim) {
    throw InputError(what + ": expected an array of " + std::to_string(dim) + " rationals");
  }
  Vec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

namespace {

std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw InputError(std::string("plane family: field '") + key + "' must be a nonnegative integer");
  }
  return j[key].get<std::size_t>();
}

std::vector<std::size_t> index_field(const json& j, const char* key, std::size_t m) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InputError(std::string("plane family: field '") + key + "' must be an array of indices");
  }
  std::vector<std::size_t> out;
  for (const auto& x : j[key]) {
    if (!x.is_number_unsigned() || x.get<std::size_t>() < 1 || x.get<std::size_t>() > m) {
      throw InputError(std::string("plane family: '") + key + "' entries must lie in 1.." + std::to_string(m));
    }
    out.push_back(x.get<std::size_t>() - 1);
  }
  return out;
}

}  // namespace

PlaneFamily family_from_json(const json& j) {
  if (!j.is_object()) throw InputError("plane family: expected a JSON object");
  const std::size_t m = count_field(j, "m");
  const std::size_t d = count_field(j, "d");
  try {
    return PlaneFamily::make(m, index_field(j, "St", m), index_field(j, "ST", m), d);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("plane family: ") + e.what());
  }
}

json family_to_json(const PlaneFamily& f) {
  json st = json::array(), sT = json::array();
  for (auto c : f.fixed) st.push_back(c + 1);
  for (auto c : f.span) sT.push_back(c + 1);
  return json{{"m", f.m}, {"St", st}, {"ST", sT}, {"d", f.d}};
}

ConcretePlane plane_from_json(const json& j) {
  PlaneFamily f = family_from_json(j);
  if (!j.contains("basepoint")) throw InputError("plane: missing 'basepoint'");
  Vec base = vec_from_json(j["basepoint"], f.m, "plane.basepoint");
  std::vector<Vec> extras;
  if (j.contains("extra_dirs")) {
    if (!j["extra_dirs"].is_array()) throw InputError("plane: 'extra_dirs' must be an array");
    for (std::size_t i = 0; i < j["extra_dirs"].size(); ++i) {
      extras.push_back(vec_from_json(j["extra_dirs"][i], f.m, "plane.extra_dirs[" + std::to_string(i) + "]"));
    }
  }
  try {
    return ConcretePlane(std::move(f), std::move(base), std::move(extras));
  } catch (const PreconditionError& e) {
    throw InputError(std::string("plane: ") + e.what());
  }
}

json plane_to_json(const ConcretePlane& p) {
  json out = family_to_json(p.family());
  out["basepoint"] = vec_to_json(p.basepoint());
  json extras = json::array();
  for (const auto& e : p.extra_directions()) extras.push_back(vec_to_json(e));
  out["extra_dirs"] = extras;
  return out;
}

std::vector<PointSet> sets_from_json(const json& j, std::size_t m) {
  if (!j.is_array() || j.empty()) throw InputError("sets: expected a nonempty array of point lists");
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].empty()) {
      throw InputError("sets[" + std::to_string(i) + "]: expected a nonempty array of points");
    }
    PointSet s;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      s.push_back(vec_from_json(j[i][k], m, "sets[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    out.push_back(std::move(s));
  }
  return out;
}

json sets_to_json(const std::vector<PointSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) {
    json pts = json::array();
    for (const auto& p : s) pts.push_back(vec_to_json(p));
    out.push_back(pts);
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace transverse
