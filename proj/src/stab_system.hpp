#pragma once

// Linear part of the common-transversal problem, shared by the exact and
// heuristic deciders.

#include <optional>
#include <vector>

#include "transverse/matrix.hpp"
#include "transverse/transversal.hpp"

namespace transverse::detail {

/// Unknowns are all lambda_ij stacked set by set. Equations: sum_j lambda_ij
/// = 1 for every set, and (Y_i - Y_0)_c = 0 for i >= 1 and c outside S_T.
struct StabSystem {
  const std::vector<PointSet>* sets = nullptr;
  PlaneFamily family;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  Mat eq;
  Vec rhs;
  std::vector<std::size_t> free;

  std::vector<Vec> lambdas_of(const Vec& x) const;
  Vec point(std::size_t set, const Vec& x) const;
  /// Rows (Y_i - Y_0) restricted to the free coordinates, i = 1..q-1.
  Mat projected_differences(const Vec& x) const;
  /// Linear functional on x giving coordinate c of Y_i - Y_0.
  Vec difference_row(std::size_t set, std::size_t coord) const;
};

/// Validates shapes and builds the system. Throws InputError on empty sets
/// or mismatched dimensions.
StabSystem build_stab_system(const std::vector<PointSet>& sets, const PlaneFamily& family);

/// Witness from a full lambda vector when the projected differences have
/// rank <= d - t; verified exactly, absent otherwise.
std::optional<StabWitness> witness_from(const StabSystem& sys, const Vec& x);

}  // namespace transverse::detail
