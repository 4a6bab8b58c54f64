#include "transverse/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "transverse/errors.hpp"

namespace transverse {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Calls fn(line_number, tokens) for each non-blank line with comments removed.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_generators(std::vector<std::string> vertex_ids,
                                                     const std::vector<Simplex>& generators) {
  SimplicialComplex k;
  k.ids_ = std::move(vertex_ids);
  std::set<Simplex> all;
  for (std::size_t v = 0; v < k.ids_.size(); ++v) all.insert(Simplex{v});
  for (Simplex g : generators) {
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw InputError("duplicate vertex in simplex");
    if (g.empty()) continue;
    if (g.back() >= k.ids_.size()) throw InputError("simplex refers to an unknown vertex");
    if (g.size() > 24) throw InputError("simplex too large");
    const std::size_t faces = std::size_t{1} << g.size();
    for (std::size_t mask = 1; mask < faces; ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (mask & (std::size_t{1} << b)) face.push_back(g[b]);
      }
      all.insert(std::move(face));
    }
  }
  k.simplexes_.assign(all.begin(), all.end());
  std::sort(k.simplexes_.begin(), k.simplexes_.end(), simplex_less);
  return k;
}

std::optional<std::size_t> SimplicialComplex::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  return std::nullopt;
}

std::vector<Simplex> SimplicialComplex::simplexes_up_to(std::size_t max_dim) const {
  std::vector<Simplex> out;
  for (const auto& s : simplexes_) {
    if (s.size() <= max_dim + 1) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplexes_.begin(), simplexes_.end(), s, simplex_less);
}

std::vector<Simplex> SimplicialComplex::maximal_simplexes() const {
  std::vector<Simplex> out;
  for (const auto& s : simplexes_) {
    bool maximal = true;
    for (const auto& t : simplexes_) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  if (simplexes_.empty()) return -1;
  return static_cast<int>(simplexes_.back().size()) - 1;
}

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::string> ids;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<Simplex> generators;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    if (tok[0] == "v") {
      if (tok.size() != 2) fail_at(line_no, "expected 'v <id>'");
      const std::string id(tok[1]);
      if (index.count(id) != 0) fail_at(line_no, "vertex '" + id + "' declared twice");
      index.emplace(id, ids.size());
      ids.push_back(id);
    } else if (tok[0] == "s") {
      if (tok.size() < 2) fail_at(line_no, "expected 's <id> ...'");
      Simplex s;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto it = index.find(tok[i]);
        if (it == index.end()) fail_at(line_no, "unknown vertex '" + std::string(tok[i]) + "'");
        if (std::find(s.begin(), s.end(), it->second) != s.end()) {
          fail_at(line_no, "duplicate vertex '" + std::string(tok[i]) + "' in simplex");
        }
        s.push_back(it->second);
      }
      generators.push_back(std::move(s));
    } else {
      fail_at(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  });
  return SimplicialComplex::from_generators(std::move(ids), generators);
}

std::string serialize_complex(const SimplicialComplex& k) {
  std::ostringstream out;
  for (const auto& id : k.vertex_ids()) out << "v " << id << '\n';
  for (const auto& s : k.maximal_simplexes()) {
    if (s.size() < 2) continue;
    out << 's';
    for (std::size_t v : s) out << ' ' << k.vertex_ids()[v];
    out << '\n';
  }
  return out.str();
}

PLMap::PLMap(std::size_t m, std::vector<Vec> images, std::optional<GenericityCertificate> certificate)
    : m_(m), images_(std::move(images)), certificate_(std::move(certificate)) {
  for (const auto& p : images_) {
    if (p.size() != m_) throw InputError("vertex image has wrong dimension");
  }
}

std::vector<Vec> PLMap::simplex_images(const Simplex& s) const {
  std::vector<Vec> out;
  out.reserve(s.size());
  for (std::size_t v : s) out.push_back(images_.at(v));
  return out;
}

PLMap PLMap::with_certificate(GenericityCertificate cert) const { return PLMap(m_, images_, std::move(cert)); }

PLMap parse_map(std::string_view text, const SimplicialComplex& k) {
  std::optional<std::size_t> m;
  std::vector<std::optional<Vec>> images(k.vertex_count());
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    if (tok[0] == "m") {
      if (tok.size() != 2 || m) fail_at(line_no, "expected a single 'm <count>' header");
      const std::string count(tok[1]);
      if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos || count.size() > 6) {
        fail_at(line_no, "bad dimension '" + count + "'");
      }
      m = std::stoul(count);
    } else if (tok[0] == "p") {
      if (!m) fail_at(line_no, "'p' record before the 'm' header");
      if (tok.size() != *m + 2) fail_at(line_no, "expected " + std::to_string(*m) + " coordinates");
      const auto v = k.index_of(tok[1]);
      if (!v) fail_at(line_no, "unknown vertex '" + std::string(tok[1]) + "'");
      if (images[*v]) fail_at(line_no, "vertex '" + std::string(tok[1]) + "' mapped twice");
      Vec p;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        try {
          p.push_back(parse_rat(tok[i]));
        } catch (const InputError& e) {
          fail_at(line_no, e.what());
        }
      }
      images[*v] = std::move(p);
    } else {
      fail_at(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  });
  if (!m) throw InputError("map file has no 'm' header");
  std::vector<Vec> out;
  for (std::size_t v = 0; v < images.size(); ++v) {
    if (!images[v]) throw InputError("vertex '" + k.vertex_ids()[v] + "' has no image");
    out.push_back(std::move(*images[v]));
  }
  return PLMap(*m, std::move(out));
}

std::string serialize_map(const PLMap& g, const SimplicialComplex& k) {
  std::ostringstream out;
  out << "m " << g.m() << '\n';
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    out << "p " << k.vertex_ids()[v];
    for (const auto& x : g.image(v)) out << ' ' << to_text(x);
    out << '\n';
  }
  return out.str();
}

GenericityCertificate certify_map(const SimplicialComplex& k, const PLMap& g) {
  std::vector<Condition> transcript;
  std::vector<Rat> coords;
  for (const auto& p : g.images()) coords.insert(coords.end(), p.begin(), p.end());
  append_distinctness(transcript, coords, "coordinate");
  for (const auto& s : k.simplexes()) {
    if (s.size() < 2) continue;
    std::string label = "affine independence {";
    for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + k.vertex_ids()[s[i]];
    label += "}";
    const Rat value = s.size() > g.m() + 1 ? Rat(0) : affine_independence_value(g.simplex_images(s));
    transcript.push_back({std::move(label), value});
  }
  return certify(std::move(transcript));
}

PLMap roberts_perturb(const SimplicialComplex& k, const PLMap& theta, const Rat& eps, GenericPool& pool) {
  if (sgn(eps) <= 0) throw PreconditionError("roberts_perturb requires eps > 0");
  if (theta.images().size() != k.vertex_count()) throw PreconditionError("theta must map every vertex");
  const std::size_t m = theta.m();
  if (m == 0) throw PreconditionError("ambient dimension must be positive");
  const Rat coord_eps = eps / static_cast<long>(m);
  const Rat eps_sq = eps * eps;
  for (int attempt = 0; attempt < kPerturbAttempts; ++attempt) {
    if (attempt > 0) pool = GenericPool(pool.seed() + 1);
    std::vector<Vec> images;
    images.reserve(k.vertex_count());
    for (std::size_t i = 0; i < k.vertex_count(); ++i) {
      Vec a(m);
      for (std::size_t s = 0; s < m; ++s) {
        a[s] = pool.draw_near(theta.image(i)[s], coord_eps, i * m + s + 1);
      }
      if (!(squared_distance(a, theta.image(i)) < eps_sq)) throw std::logic_error("perturbation outside eps");
      images.push_back(std::move(a));
    }
    PLMap g(m, std::move(images));
    GenericityCertificate cert = certify_map(k, g);
    if (cert.ok()) return g.with_certificate(std::move(cert));
  }
  throw GenericityError("genericity certification failed after " + std::to_string(kPerturbAttempts) +
                        " attempts (last seed " + std::to_string(pool.seed()) + ")");
}

Vec image_point(const PLMap& g, const Simplex& s, const Vec& barycentric) {
  if (barycentric.size() != s.size()) throw PreconditionError("barycentric length must match the simplex");
  Rat total = 0;
  for (const auto& b : barycentric) total += b;
  if (total != 1) throw PreconditionError("barycentric coordinates must sum to 1");
  Vec out = zeros(g.m());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (sgn(barycentric[j]) == 0) continue;
    const Vec& a = g.image(s[j]);
    for (std::size_t i = 0; i < g.m(); ++i) out[i] += barycentric[j] * a[i];
  }
  return out;
}

bool simplexes_disjoint(const Simplex& a, const Simplex& b) {
  for (std::size_t v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) return false;
  }
  return true;
}

Rat mesh_squared(const SimplicialComplex& k, const PLMap& g) {
  Rat best = 0;
  for (const auto& s : k.simplexes()) {
    if (s.size() != 2) continue;  // every vertex pair of a simplex is an edge
    const Rat d = squared_distance(g.image(s[0]), g.image(s[1]));
    if (d > best) best = d;
  }
  return best;
}

}  // namespace transverse
