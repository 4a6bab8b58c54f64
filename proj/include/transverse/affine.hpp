#pragma once

#include <optional>
#include <span>
#include <vector>

#include "transverse/rat.hpp"

namespace transverse {

/// Affine flat: basepoint + span(directions), with linearly independent
/// directions. An empty direction list is a single point.
class AffineSubspace {
 public:
  /// Throws PreconditionError if the directions are dependent or have the
  /// wrong length.
  AffineSubspace(std::size_t ambient_dim, Vec basepoint, std::vector<Vec> directions);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return directions_.size(); }
  const Vec& basepoint() const { return basepoint_; }
  const std::vector<Vec>& directions() const { return directions_; }

  /// Coefficients u with point = basepoint + sum u_k dir_k, if the point lies
  /// on the flat.
  std::optional<Vec> coordinates_of(std::span<const Rat> point) const;
  bool contains(std::span<const Rat> point) const { return coordinates_of(point).has_value(); }

  /// Same point set (possibly different basepoint/basis).
  bool same_flat(const AffineSubspace& other) const;

 private:
  std::size_t ambient_dim_;
  Vec basepoint_;
  std::vector<Vec> directions_;
};

/// Smallest affine flat through all points (points nonempty, each length m).
AffineSubspace affine_hull(const std::vector<Vec>& points, std::size_t m);

/// Exact intersection, or absent if empty.
std::optional<AffineSubspace> affine_intersect(const AffineSubspace& p, const AffineSubspace& q);

}  // namespace transverse
