#include "transverse/typedisj.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "transverse/errors.hpp"
#include "transverse/lp.hpp"
#include "transverse/matrix.hpp"

namespace transverse {

std::vector<Vec> barycentric_section_vertices(const ConcretePlane& plane, const std::vector<Vec>& points) {
  std::vector<Vec> w;
  for (const auto& p : points) w.push_back(plane.residual(p));
  if (!origin_in_convex_hull(w)) return {};
  const std::size_t k = points.size();
  const std::size_t rows = plane.constraints().rows();
  std::set<Vec> found;
  // A vertex is the unique solution on its support with all weights positive.
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) support.push_back(j);
    }
    if (support.size() > rows + 1) continue;
    Mat a(rows + 1, support.size());
    Vec b = zeros(rows + 1);
    for (std::size_t c = 0; c < support.size(); ++c) {
      for (std::size_t r = 0; r < rows; ++r) a(r, c) = w[support[c]][r];
      a(rows, c) = 1;
    }
    b[rows] = 1;
    auto sol = solve_affine(a, b);
    if (!sol || !sol->nullspace.empty()) continue;
    if (std::any_of(sol->particular.begin(), sol->particular.end(), [](const Rat& x) { return sgn(x) <= 0; })) {
      continue;
    }
    Vec lam = zeros(k);
    for (std::size_t c = 0; c < support.size(); ++c) lam[support[c]] = sol->particular[c];
    found.insert(std::move(lam));
  }
  return {found.begin(), found.end()};
}

PlanarSection section_of_image(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane) {
  if (g.m() != plane.family().m) throw PreconditionError("map and plane live in different dimensions");
  PlanarSection out;
  for (const auto& s : k.simplexes()) {
    const auto bary = barycentric_section_vertices(plane, g.simplex_images(s));
    if (bary.empty()) continue;
    Polytope piece;
    std::set<Vec> seen;
    for (const auto& lam : bary) {
      Vec y = image_point(g, s, lam);
      if (seen.insert(y).second) piece.vertices.push_back(std::move(y));
    }
    out.pieces.push_back(std::move(piece));
    out.source.push_back(s);
  }
  return out;
}

std::vector<Polytope> preimage_polytopes(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane) {
  if (g.m() != plane.family().m) throw PreconditionError("map and plane live in different dimensions");
  std::vector<Polytope> out;
  const std::size_t nv = k.vertex_count();
  for (const auto& s : k.simplexes()) {
    const auto bary = barycentric_section_vertices(plane, g.simplex_images(s));
    if (bary.empty()) continue;
    Polytope piece;
    for (const auto& lam : bary) {
      Vec x = zeros(nv);
      for (std::size_t j = 0; j < s.size(); ++j) x[s[j]] = lam[j];
      piece.vertices.push_back(std::move(x));
    }
    out.push_back(std::move(piece));
  }
  return out;
}

namespace {

bool pieces_meet(const Polytope& a, const Polytope& b) {
  for (const auto& u : a.vertices) {
    if (std::find(b.vertices.begin(), b.vertices.end(), u) != b.vertices.end()) return true;
  }
  return convex_hulls_meet(a.vertices, b.vertices).has_value();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Rat max_squared_distance(const std::vector<Polytope>& pieces, const std::vector<std::size_t>& a,
                         const std::vector<std::size_t>& b) {
  Rat best = 0;
  for (std::size_t i : a) {
    for (std::size_t j : b) {
      for (const auto& u : pieces[i].vertices) {
        for (const auto& v : pieces[j].vertices) {
          Rat d = squared_distance(u, v);
          if (d > best) best = d;
        }
      }
    }
  }
  return best;
}

ComponentPartition component_partition(const std::vector<Polytope>& pieces) {
  const std::size_t n = pieces.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t ri = find_root(parent, i), rj = find_root(parent, j);
      if (ri == rj) continue;
      if (pieces_meet(pieces[i], pieces[j])) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  ComponentPartition out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find_root(parent, i);
    if (slot[r] == n) {
      slot[r] = out.components.size();
      out.components.emplace_back();
    }
    out.components[slot[r]].push_back(i);
  }
  for (const auto& c : out.components) out.diameters_sq.push_back(max_squared_distance(pieces, c, c));
  return out;
}

bool eps_disjoint_type_sq(const PlanarSection& section, const Rat& eps_sq) {
  if (sgn(eps_sq) <= 0) throw PreconditionError("eps must be positive");
  const auto part = component_partition(section.pieces);
  return std::all_of(part.diameters_sq.begin(), part.diameters_sq.end(), [&](const Rat& d) { return d < eps_sq; });
}

bool eps_disjoint_type(const PlanarSection& section, const Rat& eps) {
  if (sgn(eps) <= 0) throw PreconditionError("eps must be positive");
  return eps_disjoint_type_sq(section, eps * eps);
}

CotypeResult cotype_check(const std::vector<Polytope>& preimage, std::size_t q, const Rat& eps) {
  if (q == 0) throw PreconditionError("cotype requires q >= 1");
  if (sgn(eps) <= 0) throw PreconditionError("eps must be positive");
  CotypeResult out;
  out.partition = component_partition(preimage);
  const auto& comps = out.partition.components;
  const std::size_t n = comps.size();
  if (n > kMaxCotypeComponents) {
    throw PreconditionError("cotype_check supports at most " + std::to_string(kMaxCotypeComponents) +
                            " components, got " + std::to_string(n));
  }
  const Rat eps_sq = eps * eps;
  for (const auto& d : out.partition.diameters_sq) {
    if (d > eps_sq) return out;
  }
  // Clusters are cliques of the "union stays within eps" relation.
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      compatible[i][j] = compatible[j][i] = max_squared_distance(preimage, comps[i], comps[j]) <= eps_sq;
    }
  }
  std::vector<std::vector<std::size_t>> clusters;
  std::function<bool(std::size_t)> place = [&](std::size_t c) {
    if (c == n) return true;
    // Indexed: deeper calls may grow `clusters` and move its elements.
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      if (std::all_of(clusters[k].begin(), clusters[k].end(), [&](std::size_t o) { return compatible[c][o]; })) {
        clusters[k].push_back(c);
        if (place(c + 1)) return true;
        clusters[k].pop_back();
      }
    }
    if (clusters.size() < q) {
      clusters.push_back({c});
      if (place(c + 1)) return true;
      clusters.pop_back();
    }
    return false;
  };
  out.ok = place(0);
  if (out.ok) out.clusters = clusters;
  return out;
}

}  // namespace transverse
