#pragma once

#include <optional>
#include <vector>

#include "transverse/matrix.hpp"
#include "transverse/rat.hpp"

namespace transverse {

/// The pattern "d-plane in R^m parallel to coordinate planes Pi^t in Pi^T":
/// direction space contains e_j for j in `fixed` and lies in
/// span(e_j : j in `span`). Coordinate indices are 0-based; any subsets are
/// allowed, not only prefixes.
struct PlaneFamily {
  std::size_t m = 0;
  std::vector<std::size_t> fixed;  // S_t
  std::vector<std::size_t> span;   // S_T
  std::size_t d = 0;

  std::size_t t() const { return fixed.size(); }
  std::size_t T() const { return span.size(); }

  /// Sorts and validates: S_t within S_T within {0..m-1}, t <= d <= T.
  static PlaneFamily make(std::size_t m, std::vector<std::size_t> fixed, std::vector<std::size_t> span,
                          std::size_t d);

  bool in_span(std::size_t coord) const;
  bool is_fixed(std::size_t coord) const;
  /// S_T minus S_t, sorted.
  std::vector<std::size_t> free_coords() const;
  /// Coordinates outside S_T, sorted.
  std::vector<std::size_t> outside_coords() const;

  friend bool operator==(const PlaneFamily&, const PlaneFamily&) = default;
};

/// A concrete member of a family: basepoint + span(e_j, j in S_t) +
/// span(extra_directions), of dimension exactly d, with every extra
/// direction inside span(S_T).
class ConcretePlane {
 public:
  /// Throws PreconditionError if the dimension is not exactly d or an
  /// extra direction leaves span(S_T).
  ConcretePlane(PlaneFamily family, Vec basepoint, std::vector<Vec> extra_directions);

  const PlaneFamily& family() const { return family_; }
  const Vec& basepoint() const { return basepoint_; }
  const std::vector<Vec>& extra_directions() const { return extras_; }
  /// Unit vectors of S_t followed by the extra directions.
  std::vector<Vec> directions() const;

  /// Rows N with plane = {y : N y = N basepoint}; (m - d) independent rows.
  const Mat& constraints() const { return constraints_; }
  const Vec& offsets() const { return offsets_; }

  bool contains(const Vec& y) const;
  /// N y - N basepoint; zero iff y is on the plane.
  Vec residual(const Vec& y) const;

 private:
  PlaneFamily family_;
  Vec basepoint_;
  std::vector<Vec> extras_;
  Mat constraints_;
  Vec offsets_;
};

/// The plane through `basepoint` whose extra directions are the nonzero
/// free-coordinate parts of `toward` (kept when independent), padded with
/// unit vectors of the free coordinates up to dimension d. Extra directions
/// are scaled so their first nonzero entry is 1. Throws if more independent
/// directions are supplied than d - t.
ConcretePlane plane_through(const PlaneFamily& family, const Vec& basepoint, const std::vector<Vec>& toward);

}  // namespace transverse
