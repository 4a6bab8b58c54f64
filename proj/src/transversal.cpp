#include "transverse/transversal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stab_system.hpp"
#include "transverse/errors.hpp"
#include "transverse/lp.hpp"

namespace transverse {

BoundQ bound_q(long n, long m, long d, long t, long T) {
  if (n < 0 || t < 0 || t > d || d > T || T > m) {
    throw PreconditionError("bound_q requires n >= 0 and 0 <= t <= d <= T <= m");
  }
  BoundQ out;
  if (n >= (m - n - T) * (d - t)) {
    const long denom = m - n - d;
    if (denom < 1) throw PreconditionError("regime N1 requires m - n - d >= 1");
    out.regime = Regime::N1;
    Rat frac(Int(n + (n + T - m) * (d - t)), Int(denom));
    frac.canonicalize();
    out.value = Rat(d + 1 - t) + frac;
  } else {
    const long denom = m - n - T;
    if (denom < 1) throw PreconditionError("regime N2 requires m - n - T >= 1");
    out.regime = Regime::N2;
    Rat frac{Int(n), Int(denom)};
    frac.canonicalize();
    out.value = Rat(1) + frac;
  }
  out.floor = floor_of(out.value);
  return out;
}

NonStabCase theorem11_case(const std::vector<long>& n_list, long m, long d, long t, long T) {
  const long q = static_cast<long>(n_list.size());
  const long lhs = std::accumulate(n_list.begin(), n_list.end(), 0L) + 1;
  const long k = d - t + 1;
  if (q <= k && lhs <= (m - T) * (q - 1)) return NonStabCase::CaseII;
  if (q >= k && lhs <= (m - d) * (q - 1) - (T - d) * (d - t)) return NonStabCase::CaseI;
  return NonStabCase::Inconclusive;
}

std::string to_string(NonStabCase c) {
  switch (c) {
    case NonStabCase::CaseI: return "CaseI";
    case NonStabCase::CaseII: return "CaseII";
    case NonStabCase::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(Regime r) { return r == Regime::N1 ? "N1" : "N2"; }

Lemma34Constants lemma34_constants(long n, long m, const Rat& eps, const Rat& delta) {
  if (n < 0 || m < n + 1 || sgn(eps) <= 0 || sgn(delta) <= 0) {
    throw PreconditionError("lemma34_constants requires n >= 0, m >= n+1, eps > 0, delta > 0");
  }
  Lemma34Constants out;
  out.r = n * (m + 1 - n);
  const Rat a = delta / 10;
  const Rat b = eps / Rat(9 * (out.r + 1));
  out.eta_max = std::min(a, b);
  return out;
}

namespace {

std::vector<Vec> residuals(const ConcretePlane& plane, const std::vector<Vec>& points) {
  std::vector<Vec> w;
  w.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != plane.family().m) throw PreconditionError("point has wrong dimension");
    w.push_back(plane.residual(p));
  }
  return w;
}

}  // namespace

std::optional<Vec> plane_meets_affine_hull(const ConcretePlane& plane, const std::vector<Vec>& points) {
  if (points.empty()) throw PreconditionError("empty point list");
  const auto w = residuals(plane, points);
  const std::size_t rows = plane.constraints().rows();
  Mat a(rows + 1, points.size());
  Vec b = zeros(rows + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t r = 0; r < rows; ++r) a(r, j) = w[j][r];
    a(rows, j) = 1;
  }
  b[rows] = 1;
  auto sol = solve_affine(a, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<Vec> plane_meets_simplex_image(const ConcretePlane& plane, const std::vector<Vec>& points) {
  if (points.empty()) throw PreconditionError("empty point list");
  return origin_in_convex_hull(residuals(plane, points));
}

bool verify_witness(const StabWitness& w, const std::vector<PointSet>& sets, const PlaneFamily& family) {
  const ConcretePlane& plane = w.plane;
  if (!(plane.family() == family)) return false;
  if (w.lambdas.size() != sets.size() || w.points.size() != sets.size()) return false;
  const std::size_t m = family.m;
  // Direction space: e_j for S_t, extras inside span(S_T), dimension d.
  const auto dirs = plane.directions();
  if (dirs.size() != family.d) return false;
  if (!dirs.empty() && mat_rank(Mat::from_rows(dirs)) != family.d) return false;
  for (const auto& e : plane.extra_directions()) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!family.in_span(c) && sgn(e[c]) != 0) return false;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& lam = w.lambdas[i];
    if (lam.size() != sets[i].size()) return false;
    Rat total = 0;
    Vec y = zeros(m);
    for (std::size_t j = 0; j < lam.size(); ++j) {
      total += lam[j];
      for (std::size_t c = 0; c < m; ++c) y[c] += lam[j] * sets[i][j][c];
    }
    if (total != 1 || y != w.points[i] || !plane.contains(y)) return false;
  }
  return true;
}

namespace detail {

StabSystem build_stab_system(const std::vector<PointSet>& sets, const PlaneFamily& family) {
  StabSystem sys;
  sys.sets = &sets;
  sys.family = family;
  sys.free = family.free_coords();
  for (const auto& s : sets) {
    if (s.empty()) throw InputError("point set must be nonempty");
    for (const auto& p : s) {
      if (p.size() != family.m) throw InputError("point dimension does not match the family's m");
    }
    sys.offset.push_back(sys.unknowns);
    sys.unknowns += s.size();
  }
  const auto outside = family.outside_coords();
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Vec r = zeros(sys.unknowns);
    for (std::size_t j = 0; j < sets[i].size(); ++j) r[sys.offset[i] + j] = 1;
    rows.push_back(std::move(r));
    rhs.push_back(1);
  }
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::size_t c : outside) {
      rows.push_back(sys.difference_row(i, c));
      rhs.push_back(0);
    }
  }
  sys.eq = rows.empty() ? Mat(0, sys.unknowns) : Mat::from_rows(rows);
  sys.rhs = std::move(rhs);
  return sys;
}

Vec StabSystem::difference_row(std::size_t set, std::size_t coord) const {
  Vec r = zeros(unknowns);
  const auto& s = *sets;
  for (std::size_t j = 0; j < s[set].size(); ++j) r[offset[set] + j] += s[set][j][coord];
  for (std::size_t j = 0; j < s[0].size(); ++j) r[offset[0] + j] -= s[0][j][coord];
  return r;
}

std::vector<Vec> StabSystem::lambdas_of(const Vec& x) const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < sets->size(); ++i) {
    out.emplace_back(x.begin() + static_cast<long>(offset[i]),
                     x.begin() + static_cast<long>(offset[i] + (*sets)[i].size()));
  }
  return out;
}

Vec StabSystem::point(std::size_t set, const Vec& x) const {
  Vec y = zeros(family.m);
  const auto& s = (*sets)[set];
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Rat& l = x[offset[set] + j];
    if (sgn(l) == 0) continue;
    for (std::size_t c = 0; c < family.m; ++c) y[c] += l * s[j][c];
  }
  return y;
}

Mat StabSystem::projected_differences(const Vec& x) const {
  const std::size_t q = sets->size();
  Mat d(q > 0 ? q - 1 : 0, free.size());
  const Vec y0 = point(0, x);
  for (std::size_t i = 1; i < q; ++i) {
    const Vec yi = point(i, x);
    for (std::size_t k = 0; k < free.size(); ++k) d(i - 1, k) = yi[free[k]] - y0[free[k]];
  }
  return d;
}

std::optional<StabWitness> witness_from(const StabSystem& sys, const Vec& x) {
  if (!is_zero(sub(sys.eq.apply(x), sys.rhs))) return std::nullopt;
  const std::size_t q = sys.sets->size();
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < q; ++i) pts.push_back(sys.point(i, x));
  const Mat diffs = sys.projected_differences(x);
  if (diffs.rows() > 0 && diffs.cols() > 0 && mat_rank(diffs) > sys.family.d - sys.family.t()) {
    return std::nullopt;
  }
  std::vector<Vec> toward;
  for (std::size_t i = 1; i < q; ++i) toward.push_back(sub(pts[i], pts[0]));
  StabWitness w{sys.lambdas_of(x), pts, plane_through(sys.family, pts[0], toward)};
  if (!verify_witness(w, *sys.sets, sys.family)) return std::nullopt;
  return w;
}

}  // namespace detail

LinearDecision decide_linear(const std::vector<PointSet>& sets, const PlaneFamily& family) {
  if (sets.empty()) throw PreconditionError("at least one point set is required");
  if (sets.size() > family.d - family.t() + 1) {
    throw PreconditionError("q > d - t + 1: the rank condition is not vacuous; use stab_search_general");
  }
  const auto sys = detail::build_stab_system(sets, family);
  LinearDecision out;
  out.unknowns = sys.unknowns;
  out.equations = sys.eq.rows();
  out.coefficient_rank = mat_rank(sys.eq);
  Mat aug(sys.eq.rows(), sys.eq.cols() + 1);
  for (std::size_t r = 0; r < sys.eq.rows(); ++r) {
    for (std::size_t c = 0; c < sys.eq.cols(); ++c) aug(r, c) = sys.eq(r, c);
    aug(r, sys.eq.cols()) = sys.rhs[r];
  }
  out.augmented_rank = mat_rank(aug);
  auto sol = solve_affine(sys.eq, sys.rhs);
  if (!sol) return out;
  out.witness = detail::witness_from(sys, sol->particular);
  if (!out.witness) throw std::logic_error("linear-regime solution failed exact verification");
  return out;
}

std::optional<StabWitness> stab_exists_linear(const std::vector<PointSet>& sets, const PlaneFamily& family) {
  return decide_linear(sets, family).witness;
}

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

Poly poly_determinant(const PolyMat& a) {
  const std::size_t n = a.size();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return a[0][0];
  Poly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    PolyMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = a[0][c] * poly_determinant(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

UnivariateDecision decide_from_minors(const std::vector<Poly>& minors) {
  UnivariateDecision out;
  Poly g;
  for (const auto& p : minors) g = gcd(g, p);
  out.reduced = g;
  if (g.is_zero()) {
    out.verdict = UnivariateVerdict::Stab;
    out.reason = "all minors vanish identically";
    out.root = RootLocation{Rat(0), 0, 0, 0, 0};
    return out;
  }
  if (g.degree() == 0 || !sturm_root_exists(g, std::nullopt, std::nullopt)) {
    out.verdict = UnivariateVerdict::NoStab;
    out.reason = "gcd of minors has no real root";
    return out;
  }
  out.verdict = UnivariateVerdict::Stab;
  out.reason = "gcd of minors has a real root";
  out.root = locate_real_root(g);
  if (!out.root) throw std::logic_error("Sturm count and root location disagree");
  return out;
}

UnivariateDecision stab_decide_univariate(const std::vector<PointSet>& sets, const PlaneFamily& family) {
  UnivariateDecision out;
  const std::size_t r = family.d - family.t();
  if (sets.size() != r + 2) {
    out.reason = "requires q = d - t + 2";
    return out;
  }
  const auto sys = detail::build_stab_system(sets, family);
  const auto sol = solve_affine(sys.eq, sys.rhs);
  if (!sol) {
    out.reason = "linear constraints are inconsistent";
    return out;
  }
  if (sol->nullspace.size() != 1) {
    out.reason = "constraint flat has dimension " + std::to_string(sol->nullspace.size()) + ", not 1";
    return out;
  }
  const Vec& x0 = sol->particular;
  const Vec& v = sol->nullspace[0];
  // Entries of the projected-difference matrix are affine in s.
  const Mat a0 = sys.projected_differences(x0);
  const Mat a1 = [&] {
    Vec xv = add(x0, v);
    Mat m1 = sys.projected_differences(xv);
    for (std::size_t i = 0; i < m1.rows(); ++i) {
      for (std::size_t k = 0; k < m1.cols(); ++k) m1(i, k) -= a0(i, k);
    }
    return m1;
  }();
  std::vector<Poly> minors;
  const std::size_t rows = a0.rows();  // r + 1
  for_each_subset(a0.cols(), rows, [&](const std::vector<std::size_t>& cols) {
    PolyMat pm(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t c : cols) pm[i].push_back(Poly::linear(a0(i, c), a1(i, c)));
    }
    minors.push_back(poly_determinant(pm));
  });
  out = decide_from_minors(minors);
  if (out.verdict == UnivariateVerdict::Stab && out.root && out.root->exact) {
    const Vec x = add(x0, scaled(v, *out.root->exact));
    out.witness = detail::witness_from(sys, x);
    if (!out.witness) throw std::logic_error("univariate root failed exact verification");
  }
  return out;
}

namespace {

// Positive rescaling of each residual keeps "origin in the convex hull"
// unchanged; integer entries make the exact LP cheaper.
Vec primitive_integer(const Vec& w) {
  Int l = 1;
  for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Vec out;
  out.reserve(w.size());
  for (const auto& x : w) out.emplace_back(Int(x.get_num() * (l / x.get_den())));
  return out;
}

}  // namespace

std::vector<Simplex> stabbed_simplexes(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane,
                                       std::size_t nmax) {
  std::vector<Vec> w;
  w.reserve(k.vertex_count());
  for (std::size_t v = 0; v < k.vertex_count(); ++v) w.push_back(primitive_integer(plane.residual(g.image(v))));
  // Simplexes come ordered by size, so facets are decided first; a simplex
  // with a stabbed facet is stabbed.
  std::set<Simplex> hit;
  std::vector<Simplex> out;
  for (const auto& s : k.simplexes()) {
    if (s.size() > nmax + 1) break;
    bool stabbed = false;
    if (s.size() > 1) {
      Simplex facet(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size() && !stabbed; ++drop) {
        for (std::size_t i = 0, j = 0; i < s.size(); ++i) {
          if (i != drop) facet[j++] = s[i];
        }
        stabbed = hit.count(facet) > 0;
      }
    }
    if (!stabbed) {
      std::vector<Vec> ws;
      for (std::size_t v : s) ws.push_back(w[v]);
      stabbed = origin_in_convex_hull(ws).has_value();
    }
    if (stabbed) {
      hit.insert(s);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Simplex> max_disjoint_family(const std::vector<Simplex>& candidates) {
  const std::size_t n = candidates.size();
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!simplexes_disjoint(candidates[i], candidates[j])) {
        conflict[i][j] = conflict[j][i] = true;
        ++degree[i];
        ++degree[j];
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  std::vector<std::size_t> best, current;
  std::function<void(const std::vector<std::size_t>&)> expand = [&](const std::vector<std::size_t>& cand) {
    if (current.size() > best.size()) best = current;
    if (current.size() + cand.size() <= best.size()) return;
    for (std::size_t pos = 0; pos < cand.size(); ++pos) {
      if (current.size() + (cand.size() - pos) <= best.size()) return;
      const std::size_t v = cand[pos];
      std::vector<std::size_t> next;
      for (std::size_t k = pos + 1; k < cand.size(); ++k) {
        if (!conflict[v][cand[k]]) next.push_back(cand[k]);
      }
      current.push_back(v);
      expand(next);
      current.pop_back();
    }
  };
  expand(order);
  std::sort(best.begin(), best.end());
  std::vector<Simplex> out;
  for (std::size_t i : best) out.push_back(candidates[i]);
  return out;
}

DisjointStabbing max_disjoint_stabbed(const SimplicialComplex& k, const PLMap& g, const ConcretePlane& plane,
                                      std::size_t nmax) {
  if (g.m() != plane.family().m) throw PreconditionError("map and plane live in different dimensions");
  DisjointStabbing out;
  out.stabbed = stabbed_simplexes(k, g, plane, nmax);
  out.family = max_disjoint_family(out.stabbed);
  out.count = out.family.size();
  return out;
}

}  // namespace transverse
