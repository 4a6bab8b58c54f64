#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transverse/generic.hpp"
#include "transverse/plane.hpp"
#include "transverse/poly.hpp"
#include "transverse/simplicial.hpp"

namespace transverse {

using PointSet = std::vector<Vec>;

// ---------------------------------------------------------------------------
// Cardinality bounds

enum class Regime { N1, N2 };

struct BoundQ {
  Rat value;
  Int floor;
  Regime regime = Regime::N1;
};

/// Bound on the number of pairwise disjoint simplexes of dimension <= n whose
/// generic images meet a d-plane parallel to Pi^t in Pi^T of R^m:
///   N1 = d + 1 - t + (n + (n + T - m)(d - t)) / (m - n - d)  if n >= (m-n-T)(d-t)
///   N2 = 1 + n / (m - n - T)                                 otherwise.
/// Throws PreconditionError when the selected regime's denominator is <= 0 or
/// 0 <= t <= d <= T <= m fails.
BoundQ bound_q(long n, long m, long d, long t, long T);

enum class NonStabCase { CaseI, CaseII, Inconclusive };

/// Which nonstabbing inequality applies to q = |n_list| generic sets:
///   CaseI:  q >= d-t+1 and sum n_i + 1 <= (m-d)(q-1) - (T-d)(d-t)
///   CaseII: q <= d-t+1 and sum n_i + 1 <= (m-T)(q-1)
/// At q = d-t+1 the two right-hand sides coincide; CaseII is reported there.
NonStabCase theorem11_case(const std::vector<long>& n_list, long m, long d, long t, long T);

std::string to_string(NonStabCase c);
std::string to_string(Regime r);

/// Roberts' count r = n(m+1-n) and the largest admissible mesh scale: any
/// eta strictly below eta_max satisfies 5 eta < delta/2 and
/// 9 eta (r+1) < eps.
struct Lemma34Constants {
  long r = 0;
  Rat eta_max;
};
Lemma34Constants lemma34_constants(long n, long m, const Rat& eps, const Rat& delta);

// ---------------------------------------------------------------------------
// Plane / hull incidence

/// Affine weights (sum 1) placing a point of the affine hull of `points` on
/// the plane, or absent if the hull misses it.
std::optional<Vec> plane_meets_affine_hull(const ConcretePlane& plane, const std::vector<Vec>& points);

/// As above with nonnegative weights: the plane meets the convex hull.
std::optional<Vec> plane_meets_simplex_image(const ConcretePlane& plane, const std::vector<Vec>& points);

// ---------------------------------------------------------------------------
// Common transversals

/// Y_i = sum_j lambda_ij A_ij lies on `plane` for every set.
struct StabWitness {
  std::vector<Vec> lambdas;
  std::vector<Vec> points;
  ConcretePlane plane;
};

/// Exact re-verification of a witness against the sets and family.
bool verify_witness(const StabWitness& w, const std::vector<PointSet>& sets, const PlaneFamily& family);

struct LinearDecision {
  std::optional<StabWitness> witness;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t coefficient_rank = 0;
  std::size_t augmented_rank = 0;
};

/// Exact decision for q <= d-t+1 sets: a member of the family meets every
/// affine hull iff sum_j lambda_ij = 1 and the coordinates of Y_i - Y_1
/// outside S_T vanish are jointly solvable. Absence is a proof of
/// nonexistence. Throws PreconditionError for larger q.
LinearDecision decide_linear(const std::vector<PointSet>& sets, const PlaneFamily& family);
std::optional<StabWitness> stab_exists_linear(const std::vector<PointSet>& sets, const PlaneFamily& family);

struct SearchResult {
  std::optional<StabWitness> witness;
  std::size_t sweeps = 0;
  std::size_t restarts = 0;
};

/// Heuristic search for q > d-t+1 sets. Descends on the sum of squared
/// (d-t+1)-minors of the projected differences over the linear constraint
/// flat, then snaps candidates to rationals (directly, and through the
/// combination coefficients beta of Y_j over a basis of the Y_i) and
/// verifies exactly. A missing witness proves nothing. `budget` counts
/// coordinate sweeps; randomness comes from the pool's seed.
SearchResult stab_search_general(const std::vector<PointSet>& sets, const PlaneFamily& family, std::size_t budget,
                                 const GenericPool& pool);

enum class UnivariateVerdict { Stab, NoStab, NotApplicable };

struct UnivariateDecision {
  UnivariateVerdict verdict = UnivariateVerdict::NotApplicable;
  std::string reason;
  /// gcd of all rank-condition minors along the constraint line.
  Poly reduced;
  std::optional<RootLocation> root;
  std::optional<StabWitness> witness;
};

/// Decides existence for the (d-t+1) x |S_T \ S_t| system along a
/// line: Stab iff the monic gcd of the minors has a real root (Sturm).
UnivariateDecision decide_from_minors(const std::vector<Poly>& minors);

/// Exact decision when q = d-t+2 and the linear constraint flat is a line.
/// Otherwise NotApplicable.
UnivariateDecision stab_decide_univariate(const std::vector<PointSet>& sets, const PlaneFamily& family);

// ---------------------------------------------------------------------------
// Counting disjoint stabbed simplexes

struct DisjointStabbing {
  std::size_t count = 0;
  std::vector<Simplex> family;
  std::vector<Simplex> stabbed;
};

/// Simplexes of dimension <= nmax whose images meet the plane.
std::vector<Simplex> stabbed_simplexes(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane,
                                       std::size_t nmax);

/// Exact maximum number of pairwise vertex-disjoint stabbed simplexes of
/// dimension <= nmax, with one optimal family.
DisjointStabbing max_disjoint_stabbed(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane,
                                      std::size_t nmax);

/// Maximum family of pairwise vertex-disjoint simplexes among `candidates`
/// (branch and bound, max-degree-first ordering).
std::vector<Simplex> max_disjoint_family(const std::vector<Simplex>& candidates);

}  // namespace transverse
