#include "curvegrowth/linalg.hpp"

#include <utility>

#include "curvegrowth/errors.hpp"

namespace curvegrowth {

namespace {

struct Rref {
  RationalMatrix m;
  std::vector<std::size_t> pivot_cols;
};

Rref reduced_row_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    const Rational inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const Rref rref = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < rref.pivot_cols.size(); ++r) {
      v[rref.pivot_cols[r]] = -rref.m.at(r, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivot_cols.size(); }

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ArityMismatch("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det(1);
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col).is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const Rational inv = a.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rational factor = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        a.at(i, j) -= factor * a.at(col, j);
      }
    }
  }
  return det;
}

MultiPoly determinant_fraction_free(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ArityMismatch("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw ArityMismatch("determinant of a non-square matrix");
  }
  const std::vector<std::string> vars = m[0][0].variables();
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (e.variables() != vars) throw VariableMismatch("matrix entries over different rings");
    }
  }
  if (n == 1) return m[0][0];

  PolyMatrix a = m;
  MultiPoly prev_pivot = MultiPoly::constant(vars, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // First nonzero entry in column order.
    std::size_t sel = k;
    while (sel < n && a[sel][k].is_zero()) ++sel;
    if (sel == n) return MultiPoly::zero(vars);
    if (sel != k) {
      std::swap(a[sel], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.is_zero() ? std::move(num) : num.divide_exact(prev_pivot);
      }
      a[i][k] = MultiPoly::zero(vars);
    }
    prev_pivot = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace curvegrowth
