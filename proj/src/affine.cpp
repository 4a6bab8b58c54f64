#include "transverse/affine.hpp"

#include "transverse/errors.hpp"
#include "transverse/matrix.hpp"

namespace transverse {

AffineSubspace::AffineSubspace(std::size_t ambient_dim, Vec basepoint, std::vector<Vec> directions)
    : ambient_dim_(ambient_dim), basepoint_(std::move(basepoint)), directions_(std::move(directions)) {
  if (basepoint_.size() != ambient_dim_) throw PreconditionError("basepoint has wrong dimension");
  for (const auto& d : directions_) {
    if (d.size() != ambient_dim_) throw PreconditionError("direction has wrong dimension");
  }
  if (!directions_.empty() && mat_rank(Mat::from_rows(directions_)) != directions_.size()) {
    throw PreconditionError("directions are linearly dependent");
  }
}

std::optional<Vec> AffineSubspace::coordinates_of(std::span<const Rat> point) const {
  if (point.size() != ambient_dim_) throw PreconditionError("point has wrong dimension");
  const Vec rhs = sub(point, basepoint_);
  if (directions_.empty()) {
    if (is_zero(rhs)) return Vec{};
    return std::nullopt;
  }
  const auto sol = solve_affine(Mat::from_columns(directions_, ambient_dim_), rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

bool AffineSubspace::same_flat(const AffineSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_ || other.dim() != dim()) return false;
  if (!contains(other.basepoint_)) return false;
  for (const auto& d : other.directions_) {
    if (!contains(add(basepoint_, d))) return false;
  }
  return true;
}

AffineSubspace affine_hull(const std::vector<Vec>& points, std::size_t m) {
  if (points.empty()) throw PreconditionError("affine_hull of an empty point list");
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != m) throw PreconditionError("point has wrong dimension");
    diffs.push_back(sub(points[i], points[0]));
  }
  std::vector<Vec> dirs;
  for (std::size_t idx : independent_subset(diffs)) dirs.push_back(diffs[idx]);
  return AffineSubspace(m, points[0], std::move(dirs));
}

std::optional<AffineSubspace> affine_intersect(const AffineSubspace& p, const AffineSubspace& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw PreconditionError("ambient dimensions differ");
  const std::size_t m = p.ambient_dim();
  // Solve D u - E v = q0 - p0.
  std::vector<Vec> cols = p.directions();
  for (const auto& e : q.directions()) cols.push_back(scaled(e, Rat(-1)));
  const Vec rhs = sub(q.basepoint(), p.basepoint());
  if (cols.empty()) {
    if (is_zero(rhs)) return p;
    return std::nullopt;
  }
  const auto sol = solve_affine(Mat::from_columns(cols, m), rhs);
  if (!sol) return std::nullopt;
  auto point_of = [&](const Vec& uv, bool homogeneous) {
    Vec x = homogeneous ? zeros(m) : p.basepoint();
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (sgn(uv[k]) == 0) continue;
      for (std::size_t i = 0; i < m; ++i) x[i] += uv[k] * p.directions()[k][i];
    }
    return x;
  };
  // (u, v) -> D u is injective on the nullspace because D and E both have
  // independent columns, so the images stay independent.
  std::vector<Vec> dirs;
  for (const auto& n : sol->nullspace) dirs.push_back(point_of(n, true));
  return AffineSubspace(m, point_of(sol->particular, false), std::move(dirs));
}

}  // namespace transverse
