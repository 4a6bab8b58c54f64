#include "transverse/plane.hpp"

#include <algorithm>

#include "transverse/errors.hpp"

namespace transverse {

PlaneFamily PlaneFamily::make(std::size_t m, std::vector<std::size_t> fixed, std::vector<std::size_t> span,
                              std::size_t d) {
  std::sort(fixed.begin(), fixed.end());
  std::sort(span.begin(), span.end());
  if (std::adjacent_find(fixed.begin(), fixed.end()) != fixed.end() ||
      std::adjacent_find(span.begin(), span.end()) != span.end()) {
    throw PreconditionError("repeated coordinate index in plane family");
  }
  if (!span.empty() && span.back() >= m) throw PreconditionError("coordinate index out of range");
  if (!std::includes(span.begin(), span.end(), fixed.begin(), fixed.end())) {
    throw PreconditionError("S_t must be contained in S_T");
  }
  if (d < fixed.size() || d > span.size()) throw PreconditionError("plane family requires t <= d <= T");
  return PlaneFamily{m, std::move(fixed), std::move(span), d};
}

bool PlaneFamily::in_span(std::size_t coord) const { return std::binary_search(span.begin(), span.end(), coord); }

bool PlaneFamily::is_fixed(std::size_t coord) const {
  return std::binary_search(fixed.begin(), fixed.end(), coord);
}

std::vector<std::size_t> PlaneFamily::free_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t c : span) {
    if (!is_fixed(c)) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> PlaneFamily::outside_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m; ++c) {
    if (!in_span(c)) out.push_back(c);
  }
  return out;
}

ConcretePlane::ConcretePlane(PlaneFamily family, Vec basepoint, std::vector<Vec> extra_directions)
    : family_(std::move(family)), basepoint_(std::move(basepoint)), extras_(std::move(extra_directions)) {
  const std::size_t m = family_.m;
  if (basepoint_.size() != m) throw PreconditionError("basepoint has wrong dimension");
  for (const auto& e : extras_) {
    if (e.size() != m) throw PreconditionError("extra direction has wrong dimension");
    for (std::size_t c = 0; c < m; ++c) {
      if (!family_.in_span(c) && sgn(e[c]) != 0) throw PreconditionError("extra direction leaves span(S_T)");
    }
  }
  const std::vector<Vec> dirs = directions();
  const std::size_t dim = dirs.empty() ? 0 : mat_rank(Mat::from_rows(dirs));
  if (dim != family_.d || dirs.size() != family_.d) {
    throw PreconditionError("plane directions must be independent and span exactly d dimensions");
  }
  // Constraint rows: normals to the direction space.
  std::vector<Vec> normals;
  if (dirs.empty()) {
    for (std::size_t c = 0; c < m; ++c) normals.push_back(unit_vector(m, c));
  } else {
    normals = nullspace(Mat::from_rows(dirs));
    for (auto& n : normals) n = normalized_leading(n);
  }
  constraints_ = Mat::from_rows(normals);
  if (normals.empty()) constraints_ = Mat(0, m);
  offsets_ = constraints_.apply(basepoint_);
}

std::vector<Vec> ConcretePlane::directions() const {
  std::vector<Vec> dirs;
  for (std::size_t c : family_.fixed) dirs.push_back(unit_vector(family_.m, c));
  dirs.insert(dirs.end(), extras_.begin(), extras_.end());
  return dirs;
}

Vec ConcretePlane::residual(const Vec& y) const { return sub(constraints_.apply(y), offsets_); }

bool ConcretePlane::contains(const Vec& y) const { return is_zero(residual(y)); }

ConcretePlane plane_through(const PlaneFamily& family, const Vec& basepoint, const std::vector<Vec>& toward) {
  const std::size_t m = family.m;
  const auto free = family.free_coords();
  std::vector<Vec> projected;
  for (const auto& v : toward) {
    Vec p = zeros(m);
    for (std::size_t c : free) p[c] = v[c];
    if (!is_zero(p)) projected.push_back(normalized_leading(p));
  }
  std::vector<Vec> extras;
  for (std::size_t idx : independent_subset(projected)) extras.push_back(projected[idx]);
  const std::size_t need = family.d - family.t();
  if (extras.size() > need) throw PreconditionError("directions exceed the family's d - t free dimensions");
  std::vector<Vec> pads;
  for (std::size_t c : free) pads.push_back(unit_vector(m, c));
  for (auto& v : extend_basis(extras, pads, need)) extras.push_back(std::move(v));
  return ConcretePlane(family, basepoint, std::move(extras));
}

}  // namespace transverse
