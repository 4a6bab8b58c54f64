#include "transverse/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace transverse {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  Mat out(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < width; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t height) {
  Mat out(height, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) throw std::invalid_argument("ragged columns");
    for (std::size_t r = 0; r < height; ++r) out(r, c) = cols[c][r];
  }
  return out;
}

Mat Mat::identity(std::size_t n) {
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Vec Mat::apply(std::span<const Rat> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in Mat::apply");
  Vec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rat& e = (*this)(r, c);
      if (sgn(e) != 0) acc += e * x[c];
    }
    out[r] = acc;
  }
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Int>>;

// Scales each row by the lcm of its denominators. Returns the product of the
// scale factors so determinants can be corrected.
IntRows integer_rows(const Mat& a, Int* scale_product) {
  IntRows out(a.rows(), std::vector<Int>(a.cols()));
  Int product = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rat& e = a(r, c);
      out[r][c] = e.get_num() * (l / e.get_den());
    }
    product *= l;
  }
  if (scale_product != nullptr) *scale_product = product;
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  Int last_pivot = 1;
  int swaps_sign = 1;
};

// In-place fraction-free forward elimination. After processing k pivots,
// every remaining entry is a (k+1)-minor of the input, so each division by
// the previous pivot is exact.
BareissResult bareiss(IntRows& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.swaps_sign = -res.swaps_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t mat_rank(const Mat& a) {
  IntRows rows = integer_rows(a, nullptr);
  return bareiss(rows, a.cols()).rank;
}

Rat determinant(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (a.rows() == 0) return Rat(1);
  Int scale;
  IntRows rows = integer_rows(a, &scale);
  const BareissResult res = bareiss(rows, a.cols());
  if (res.rank < a.rows()) return Rat(0);
  Rat det(res.last_pivot * res.swaps_sign, scale);
  det.canonicalize();
  return det;
}

namespace {

struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan to reduced row echelon form over the rationals.
Echelon rref(Mat m, std::size_t elim_cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const Mat& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: |b| != rows(a)");
  const std::size_t n = a.cols();
  Mat aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const Echelon e = rref(std::move(aug), n);
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t r = rank; r < a.rows(); ++r) {
    if (sgn(e.reduced(r, n)) != 0) return std::nullopt;
  }
  AffineSolution sol;
  sol.particular = zeros(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < rank; ++k) {
    is_pivot[e.pivot_cols[k]] = true;
    sol.particular[e.pivot_cols[k]] = e.reduced(k, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(n);
    v[f] = 1;
    for (std::size_t k = 0; k < rank; ++k) v[e.pivot_cols[k]] = -e.reduced(k, f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<Vec> nullspace(const Mat& a) {
  return solve_affine(a, zeros(a.rows()))->nullspace;
}

namespace {

// Incrementally maintained echelon basis: reduce a vector against it and
// keep it if a nonzero remainder survives.
class EchelonBasis {
 public:
  bool insert(const Vec& v) {
    Vec w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat& coeff = w[pivots_[k]];
      if (sgn(coeff) == 0) continue;
      const Rat f = coeff;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (sgn(rows_[k][j]) != 0) w[j] -= f * rows_[k][j];
      }
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (sgn(w[j]) != 0) {
        const Rat inv = 1 / w[j];
        for (auto& x : w) x *= inv;
        // Keep the stored rows fully reduced in the new pivot column.
        for (auto& row : rows_) {
          if (sgn(row[j]) == 0) continue;
          const Rat f = row[j];
          for (std::size_t c = 0; c < w.size(); ++c) {
            if (sgn(w[c]) != 0) row[c] -= f * w[c];
          }
        }
        rows_.push_back(std::move(w));
        pivots_.push_back(j);
        return true;
      }
    }
    return false;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors) {
  EchelonBasis basis;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (basis.insert(vectors[i])) picked.push_back(i);
  }
  return picked;
}

std::vector<Vec> extend_basis(const std::vector<Vec>& basis, const std::vector<Vec>& candidates,
                              std::size_t target_dim) {
  EchelonBasis eb;
  for (const auto& b : basis) eb.insert(b);
  std::vector<Vec> added;
  for (const auto& c : candidates) {
    if (eb.size() >= target_dim) break;
    if (eb.insert(c)) added.push_back(c);
  }
  return added;
}

}  // namespace transverse
