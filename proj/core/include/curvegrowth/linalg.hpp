#ifndef CURVEGROWTH_LINALG_HPP
#define CURVEGROWTH_LINALG_HPP

#include <cstddef>
#include <vector>

#include "curvegrowth/multipoly.hpp"
#include "curvegrowth/rational.hpp"

namespace curvegrowth {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Basis of the right kernel {v : M v = 0}, computed by exact Gauss-Jordan
/// elimination. The basis is canonical: one vector per free column in
/// column order, carrying 1 in its own free slot and 0 in the others, so
/// output is deterministic. Vector count is always cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Rank via the same elimination.
std::size_t rank(const RationalMatrix& m);

/// Exact determinant of a square matrix with rational entries.
Rational determinant(const RationalMatrix& m);

/// Square matrix with polynomial entries, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant by Bareiss fraction-free elimination: every division
/// performed is exact over the polynomial ring, which keeps intermediate
/// coefficient growth polynomial instead of exponential. Pivots are chosen
/// as the first nonzero entry in column order. All entries must share one
/// variable list.
MultiPoly determinant_fraction_free(const PolyMatrix& m);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_LINALG_HPP
