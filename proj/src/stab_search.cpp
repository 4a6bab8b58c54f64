#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "stab_system.hpp"
#include "transverse/transversal.hpp"

namespace transverse {

namespace {

constexpr std::size_t kSweepsPerRestart = 10;
constexpr int kGoldenSteps = 12;
constexpr unsigned kGridBits = 20;

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rat dyadic(const Rat& x, unsigned bits) {
  Int scale = 1;
  scale <<= bits;
  Rat y = x * scale;
  Int n = floor_of(y + Rat(1, 2));
  Rat out(n, scale);
  out.canonicalize();
  return out;
}

Rat power_of_two(int e) {
  Rat out = 1;
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned>(-e));
  }
  return out;
}

class MinorSearch {
 public:
  MinorSearch(const detail::StabSystem& sys, Vec x0, std::vector<Vec> basis)
      : sys_(sys), x0_(std::move(x0)), basis_(std::move(basis)), r_(sys.family.d - sys.family.t()) {}

  Vec point_of(const Vec& z) const {
    Vec x = x0_;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (sgn(z[k]) == 0) continue;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += z[k] * basis_[k][i];
    }
    return x;
  }

  /// Sum of squared (r+1)-minors of the projected differences.
  Rat objective(const Vec& z) const {
    const Mat d = sys_.projected_differences(point_of(z));
    Rat total = 0;
    for_each_subset(d.rows(), r_ + 1, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(d.cols(), r_ + 1, [&](const std::vector<std::size_t>& cols) {
        Mat sub(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = d(rows[i], cols[j]);
        }
        const Rat det = determinant(sub);
        total += det * det;
        return true;
      });
      return true;
    });
    return total;
  }

  std::size_t dim() const { return basis_.size(); }

  /// Snap z directly, then through combination coefficients.
  std::optional<StabWitness> candidates(const Vec& z) const {
    for (int bits : {4, 8, 12, 16}) {
      Vec zs = z;
      for (auto& c : zs) c = snap_rational(c, power_of_two(-bits));
      if (auto w = detail::witness_from(sys_, point_of(zs))) return w;
    }
    return through_beta(point_of(z));
  }

 private:
  // Y_j - Y_0 = sum_i beta_ji (Y_i - Y_0) over a basis subset I turns the
  // rank condition into linear equations in lambda once beta is fixed.
  std::optional<StabWitness> through_beta(const Vec& x) const {
    const Mat d = sys_.projected_differences(x);
    std::optional<StabWitness> found;
    for_each_subset(d.rows(), r_, [&](const std::vector<std::size_t>& basis_rows) {
      Mat gram(r_, r_);
      for (std::size_t a = 0; a < r_; ++a) {
        for (std::size_t b = 0; b < r_; ++b) gram(a, b) = dot(d.row(basis_rows[a]), d.row(basis_rows[b]));
      }
      if (r_ > 0 && sgn(determinant(gram)) == 0) return true;
      std::vector<std::size_t> others;
      for (std::size_t j = 0; j < d.rows(); ++j) {
        if (std::find(basis_rows.begin(), basis_rows.end(), j) == basis_rows.end()) others.push_back(j);
      }
      std::vector<Vec> betas;
      for (std::size_t j : others) {
        Vec rhs(r_);
        for (std::size_t a = 0; a < r_; ++a) rhs[a] = dot(d.row(basis_rows[a]), d.row(j));
        betas.push_back(r_ == 0 ? Vec{} : solve_affine(gram, rhs)->particular);
      }
      for (int bits : {4, 8, 12}) {
        std::vector<Vec> rows;
        Vec rhs;
        for (std::size_t r = 0; r < sys_.eq.rows(); ++r) {
          rows.emplace_back(sys_.eq.row(r).begin(), sys_.eq.row(r).end());
          rhs.push_back(sys_.rhs[r]);
        }
        for (std::size_t o = 0; o < others.size(); ++o) {
          Vec beta = betas[o];
          for (auto& b : beta) b = snap_rational(b, power_of_two(-bits));
          for (std::size_t f : sys_.free) {
            Vec row = sys_.difference_row(others[o] + 1, f);
            for (std::size_t a = 0; a < r_; ++a) {
              row = sub(row, scaled(sys_.difference_row(basis_rows[a] + 1, f), beta[a]));
            }
            rows.push_back(std::move(row));
            rhs.push_back(0);
          }
        }
        auto sol = solve_affine(Mat::from_rows(rows), rhs);
        if (!sol) continue;
        if ((found = detail::witness_from(sys_, sol->particular))) return false;
      }
      return true;
    });
    return found;
  }

  const detail::StabSystem& sys_;
  Vec x0_;
  std::vector<Vec> basis_;
  std::size_t r_;
};

}  // namespace

SearchResult stab_search_general(const std::vector<PointSet>& sets, const PlaneFamily& family, std::size_t budget,
                                 const GenericPool& pool) {
  SearchResult out;
  if (budget == 0 || sets.empty()) return out;
  const auto sys = detail::build_stab_system(sets, family);
  const auto sol = solve_affine(sys.eq, sys.rhs);
  if (!sol) return out;
  MinorSearch search(sys, sol->particular, sol->nullspace);
  const std::size_t k = search.dim();

  const Rat rho(89, 233);  // ~ 2 - golden ratio
  while (out.sweeps < budget) {
    std::mt19937_64 rng(derive_seed(pool.seed(), out.restarts));
    ++out.restarts;
    std::uniform_int_distribution<long> start(-128, 128);
    Vec z(k);
    for (auto& c : z) c = Rat(start(rng), 64);
    for (auto& c : z) c.canonicalize();
    Rat best = search.objective(z);
    Rat width = 1;
    for (std::size_t s = 0; s < kSweepsPerRestart && out.sweeps < budget; ++s) {
      ++out.sweeps;
      for (std::size_t coord = 0; coord < k && sgn(best) != 0; ++coord) {
        Rat lo = z[coord] - width, hi = z[coord] + width;
        auto eval_at = [&](const Rat& v) {
          Vec probe = z;
          probe[coord] = v;
          return search.objective(probe);
        };
        Rat a = dyadic(lo + rho * (hi - lo), kGridBits), b = dyadic(hi - rho * (hi - lo), kGridBits);
        Rat fa = eval_at(a), fb = eval_at(b);
        for (int step = 0; step < kGoldenSteps; ++step) {
          if (fa <= fb) {
            hi = b;
            b = a;
            fb = fa;
            a = dyadic(lo + rho * (hi - lo), kGridBits);
            fa = eval_at(a);
          } else {
            lo = a;
            a = b;
            fa = fb;
            b = dyadic(hi - rho * (hi - lo), kGridBits);
            fb = eval_at(b);
          }
        }
        const Rat& cand = fa <= fb ? a : b;
        const Rat& fc = fa <= fb ? fa : fb;
        if (fc < best) {
          best = fc;
          z[coord] = cand;
        }
      }
      if (auto w = search.candidates(z)) {
        out.witness = std::move(w);
        return out;
      }
      width /= 2;
    }
  }
  return out;
}

}  // namespace transverse
