#pragma once

#include <vector>

#include "transverse/plane.hpp"
#include "transverse/rat.hpp"
#include "transverse/simplicial.hpp"

namespace transverse {

/// Convex polytope given by its (pairwise distinct) vertices.
struct Polytope {
  std::vector<Vec> vertices;
};

/// plane ∩ g(|K|) as one convex piece per simplex whose image meets the
/// plane. Pieces of faces repeat inside pieces of cofaces.
struct PlanarSection {
  std::vector<Polytope> pieces;
  std::vector<Simplex> source;
};

/// Connected components of a union of polytopes (pieces joined when they
/// intersect, transitively) and the squared diameter of each.
struct ComponentPartition {
  std::vector<std::vector<std::size_t>> components;
  std::vector<Rat> diameters_sq;
};

/// Vertices of {lambda >= 0, sum lambda = 1, sum lambda_j w_j = 0} for the
/// residuals w_j of the given points, as barycentric weight vectors.
std::vector<Vec> barycentric_section_vertices(const ConcretePlane& plane, const std::vector<Vec>& points);

PlanarSection section_of_image(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane);

ComponentPartition component_partition(const std::vector<Polytope>& pieces);

/// Every component has diameter < eps.
bool eps_disjoint_type(const PlanarSection& section, const Rat& eps);
/// Every component has squared diameter < eps_sq.
bool eps_disjoint_type_sq(const PlanarSection& section, const Rat& eps_sq);

/// g^{-1}(plane) per simplex, in the standard realization of K where vertex
/// i sits at the i-th unit point of R^{|V|}.
std::vector<Polytope> preimage_polytopes(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane);

constexpr std::size_t kMaxCotypeComponents = 12;

struct CotypeResult {
  bool ok = false;
  ComponentPartition partition;
  /// Component indices grouped into at most q clusters when ok.
  std::vector<std::vector<std::size_t>> clusters;
};

/// Whether the components can be grouped into at most q clusters of
/// diameter <= eps. Throws PreconditionError above kMaxCotypeComponents
/// components, for q = 0 or eps <= 0.
CotypeResult cotype_check(const std::vector<Polytope>& preimage, std::size_t q, const Rat& eps);

/// Largest squared distance between a vertex of `a` and a vertex of `b`
/// over all pieces listed.
Rat max_squared_distance(const std::vector<Polytope>& pieces, const std::vector<std::size_t>& a,
                         const std::vector<std::size_t>& b);

}  // namespace transverse
