#pragma once

#include <optional>
#include <span>
#include <vector>

#include "transverse/matrix.hpp"

namespace transverse {

/// Exact feasibility of {x : eq·x = rhs, x_i >= 0 for i in nonneg_vars}.
/// Phase-one simplex over the rationals with Bland's rule. The returned
/// witness satisfies every constraint exactly.
std::optional<Vec> lp_feasible(const Mat& eq, std::span<const Rat> rhs,
                               const std::vector<std::size_t>& nonneg_vars);

/// Convex weights mu (mu >= 0, sum 1) with sum mu_j w_j = 0, if the origin
/// lies in conv(w). Sign and rank filters run before the LP.
std::optional<Vec> origin_in_convex_hull(const std::vector<Vec>& w);

struct HullMeeting {
  Vec weights_p;
  Vec weights_q;
};

/// Whether conv(p) and conv(q) share a point, with convex weights on both.
std::optional<HullMeeting> convex_hulls_meet(const std::vector<Vec>& p, const std::vector<Vec>& q);

}  // namespace transverse
