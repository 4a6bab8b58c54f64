#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "transverse/generic.hpp"
#include "transverse/plane.hpp"
#include "transverse/simplicial.hpp"
#include "transverse/transversal.hpp"

namespace transverse {

// ---------------------------------------------------------------------------
// Random instances

/// Vertices v0..v{n-1}; each (dim+1)-subset becomes a generator with
/// probability `density`.
SimplicialComplex random_complex(std::size_t vertices, std::size_t dim, const Rat& density, std::uint64_t seed);

/// Random complex of dimension exactly `dim` (resampled until it is).
SimplicialComplex random_complex_of_dim(std::size_t vertices, std::size_t dim, const Rat& density,
                                        std::uint64_t seed);

/// Vertex images with integer coordinates in [-8, 8].
PLMap random_lattice_map(const SimplicialComplex& k, std::size_t m, std::uint64_t seed);

struct GenericSets {
  std::vector<PointSet> sets;
  GenericityCertificate certificate;
  std::uint64_t seed = 0;
};

/// n_i + 1 points per set, every coordinate drawn from its own stream.
/// Certified by pairwise distinct coordinates and affine independence of
/// each set (when it fits in R^m); regenerated with seed+1 up to
/// kPerturbAttempts times, then GenericityError.
GenericSets generic_point_sets(const std::vector<long>& n_list, std::size_t m, std::uint64_t seed);

/// Random S_T of size T and S_t within it of size t.
PlaneFamily random_family(std::size_t m, std::size_t d, std::size_t t, std::size_t T, std::mt19937_64& rng);

/// Uniform integer in [lo, hi] divided by `den`.
Rat random_rat(std::mt19937_64& rng, long lo, long hi, long den);

/// Convex weights summing to 1 with positive entries, from a small grid.
Vec random_barycentric(std::mt19937_64& rng, std::size_t k);

// ---------------------------------------------------------------------------
// Batch verification

struct BatchResult {
  nlohmann::json results;
  std::size_t violations = 0;
  int exit_code = 0;
};

/// Grid keys (all optional, unknown keys rejected):
///   linear:     {m_max, n_max}          trials per parameter tuple
///   univariate: {m_max, n_max}          trials per parameter tuple
///   compliance: {m: [..], max_vertices, max_dim, planes}
///                                       trials = complexes per m
///   embedding:  {n_max, max_vertices, points}
///                                       trials = complexes
///   fixtures:   [{name, family, sets, mode, expect, budget?}]
///   threads:    worker count (default: hardware, at most 8)
/// trials = 0 runs nothing. Results merge in grid order regardless of
/// threads. Throws InputError on a malformed grid.
BatchResult batch_verify(const nlohmann::json& grid, std::size_t trials, std::uint64_t seed);

}  // namespace transverse
