#include "transverse/lp.hpp"

#include <stdexcept>

namespace transverse {

namespace {

// Dense tableau for: minimize sum of artificials subject to
// A x + I a = b, x, a >= 0, b >= 0.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const Mat& a, const Vec& b) : rows_(a.rows()), vars_(a.cols() + a.rows()) {
    t_ = Mat(rows_ + 1, vars_ + 1);
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) t_(r, c) = a(r, c);
      t_(r, a.cols() + r) = 1;
      t_(r, vars_) = b[r];
      basis_[r] = a.cols() + r;
    }
    // Reduced costs of the artificial objective: -(sum of rows) on structurals.
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rat s = 0;
      for (std::size_t r = 0; r < rows_; ++r) s += a(r, c);
      t_(rows_, c) = -s;
    }
    Rat s = 0;
    for (std::size_t r = 0; r < rows_; ++r) s += b[r];
    t_(rows_, vars_) = -s;
  }

  void solve() {
    while (true) {
      // Bland: smallest-index entering column with negative reduced cost.
      std::size_t enter = vars_;
      for (std::size_t c = 0; c < vars_; ++c) {
        if (sgn(t_(rows_, c)) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == vars_) return;
      std::size_t leave = rows_;
      Rat best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(t_(r, enter)) <= 0) continue;
        Rat ratio = t_(r, vars_) / t_(r, enter);
        if (leave == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return;  // unbounded cannot happen in phase one
      pivot(leave, enter);
    }
  }

  Rat objective() const { return -t_(rows_, vars_); }

  Vec values(std::size_t structural) const {
    Vec x = zeros(structural);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < structural) x[basis_[r]] = t_(r, vars_);
    }
    return x;
  }

 private:
  void pivot(std::size_t pr, std::size_t pc) {
    const Rat inv = 1 / t_(pr, pc);
    for (std::size_t c = 0; c <= vars_; ++c) {
      if (sgn(t_(pr, c)) != 0) t_(pr, c) *= inv;
    }
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr || sgn(t_(r, pc)) == 0) continue;
      const Rat f = t_(r, pc);
      for (std::size_t c = 0; c <= vars_; ++c) {
        if (sgn(t_(pr, c)) != 0) t_(r, c) -= f * t_(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  std::size_t rows_;
  std::size_t vars_;
  Mat t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<Vec> lp_feasible(const Mat& eq, std::span<const Rat> rhs,
                               const std::vector<std::size_t>& nonneg_vars) {
  if (rhs.size() != eq.rows()) throw std::invalid_argument("lp_feasible: |rhs| != rows");
  const std::size_t n = eq.cols();
  std::vector<bool> nonneg(n, false);
  for (std::size_t i : nonneg_vars) {
    if (i >= n) throw std::invalid_argument("lp_feasible: variable index out of range");
    nonneg[i] = true;
  }
  // Free variables split as x = x+ - x-; the x- columns are appended.
  std::vector<std::size_t> minus_of;
  std::vector<std::size_t> free_vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (!nonneg[i]) free_vars.push_back(i);
  }
  const std::size_t width = n + free_vars.size();
  Mat a(eq.rows(), width);
  Vec b(rhs.begin(), rhs.end());
  for (std::size_t r = 0; r < eq.rows(); ++r) {
    const bool flip = sgn(b[r]) < 0;
    for (std::size_t c = 0; c < n; ++c) a(r, c) = flip ? Rat(-eq(r, c)) : eq(r, c);
    for (std::size_t k = 0; k < free_vars.size(); ++k) {
      a(r, n + k) = flip ? eq(r, free_vars[k]) : Rat(-eq(r, free_vars[k]));
    }
    if (flip) b[r] = -b[r];
  }
  PhaseOneTableau tab(a, b);
  tab.solve();
  if (sgn(tab.objective()) != 0) return std::nullopt;
  const Vec y = tab.values(width);
  Vec x(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = 0; k < free_vars.size(); ++k) x[free_vars[k]] -= y[n + k];
  if (eq.apply(x) != Vec(rhs.begin(), rhs.end())) throw std::logic_error("lp witness failed verification");
  return x;
}

std::optional<Vec> origin_in_convex_hull(const std::vector<Vec>& w) {
  if (w.empty()) return std::nullopt;
  const std::size_t k = w.size();
  const std::size_t dim = w.front().size();
  for (std::size_t j = 0; j < k; ++j) {
    if (is_zero(w[j])) return unit_vector(k, j);
  }
  // A coordinate with one strict sign on every point separates the origin.
  for (std::size_t i = 0; i < dim; ++i) {
    const int s = sgn(w[0][i]);
    if (s == 0) continue;
    bool same = true;
    for (std::size_t j = 1; j < k && same; ++j) same = sgn(w[j][i]) == s;
    if (same) return std::nullopt;
  }
  // The origin as a convex combination forces a linear dependence.
  if (k <= dim && mat_rank(Mat::from_rows(w)) == k) return std::nullopt;
  Mat eq(dim + 1, k);
  Vec rhs = zeros(dim + 1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < dim; ++i) eq(i, j) = w[j][i];
    eq(dim, j) = 1;
  }
  rhs[dim] = 1;
  std::vector<std::size_t> all(k);
  for (std::size_t j = 0; j < k; ++j) all[j] = j;
  return lp_feasible(eq, rhs, all);
}

std::optional<HullMeeting> convex_hulls_meet(const std::vector<Vec>& p, const std::vector<Vec>& q) {
  if (p.empty() || q.empty()) return std::nullopt;
  const std::size_t dim = p.front().size();
  for (std::size_t i = 0; i < dim; ++i) {
    Rat pmin = p[0][i], pmax = p[0][i], qmin = q[0][i], qmax = q[0][i];
    for (const auto& x : p) {
      if (x[i] < pmin) pmin = x[i];
      if (x[i] > pmax) pmax = x[i];
    }
    for (const auto& x : q) {
      if (x[i] < qmin) qmin = x[i];
      if (x[i] > qmax) qmax = x[i];
    }
    if (pmax < qmin || qmax < pmin) return std::nullopt;
  }
  // If the edge vectors of both hulls plus the offset are independent, the
  // affine hulls themselves are disjoint.
  std::vector<Vec> vecs;
  for (std::size_t i = 1; i < p.size(); ++i) vecs.push_back(sub(p[i], p[0]));
  for (std::size_t i = 1; i < q.size(); ++i) vecs.push_back(sub(q[i], q[0]));
  vecs.push_back(sub(q[0], p[0]));
  if (vecs.size() <= dim && mat_rank(Mat::from_rows(vecs)) == vecs.size()) return std::nullopt;

  const std::size_t kp = p.size(), kq = q.size();
  Mat eq(dim + 2, kp + kq);
  Vec rhs = zeros(dim + 2);
  for (std::size_t j = 0; j < kp; ++j) {
    for (std::size_t i = 0; i < dim; ++i) eq(i, j) = p[j][i];
    eq(dim, j) = 1;
  }
  for (std::size_t j = 0; j < kq; ++j) {
    for (std::size_t i = 0; i < dim; ++i) eq(i, kp + j) = -q[j][i];
    eq(dim + 1, kp + j) = 1;
  }
  rhs[dim] = 1;
  rhs[dim + 1] = 1;
  std::vector<std::size_t> all(kp + kq);
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  const auto x = lp_feasible(eq, rhs, all);
  if (!x) return std::nullopt;
  HullMeeting out;
  out.weights_p.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(kp));
  out.weights_q.assign(x->begin() + static_cast<std::ptrdiff_t>(kp), x->end());
  return out;
}

}  // namespace transverse
