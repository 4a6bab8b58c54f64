#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "transverse/rat.hpp"

namespace transverse {

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t height);
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  Mat transposed() const;
  Vec apply(std::span<const Rat> x) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Exact rank by fraction-free (Bareiss) elimination with first-nonzero
/// pivoting. Rows are first scaled to integers.
std::size_t mat_rank(const Mat& a);

/// Determinant of a square matrix, Bareiss elimination.
Rat determinant(const Mat& a);

struct AffineSolution {
  Vec particular;
  std::vector<Vec> nullspace;
};

/// All solutions of a·x = b: one particular solution (free variables set to
/// zero) and a basis of the homogeneous solutions. Absent if inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& a, std::span<const Rat> b);

/// Basis of {x : a·x = 0}.
std::vector<Vec> nullspace(const Mat& a);

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// input order.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors);

/// Greedily extends `basis` with vectors from `candidates` (in order) that
/// increase the span, stopping once `target_dim` is reached. Returns only the
/// vectors that were added.
std::vector<Vec> extend_basis(const std::vector<Vec>& basis, const std::vector<Vec>& candidates,
                              std::size_t target_dim);

}  // namespace transverse
