#include <doctest.h>

#include "curvegrowth/linalg.hpp"
#include "support.hpp"

using namespace curvegrowth;
using curvegrowth::testing::random_rational;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  }
  return m;
}

bool in_kernel(const RationalMatrix& m, const std::vector<Rational>& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel basis examples") {
  SUBCASE("[[1,1]] has a one-dimensional kernel spanned by (1,-1)") {
    const auto basis = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(basis.size() == 1);
    // Up to scaling.
    CHECK(basis[0][0] * Rational(-1) == basis[0][1]);
  }
  SUBCASE("identity has an empty kernel") {
    const auto basis = kernel_basis(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(basis.empty());
  }
  SUBCASE("zero matrix has a full kernel") {
    const auto basis = kernel_basis(from_rows({{0, 0, 0}, {0, 0, 0}}));
    CHECK(basis.size() == 3);
  }
}

TEST_CASE("kernel vectors verified by multiplication; rank-nullity") {
  SeededRng rng(101);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform_int(1, 5));
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.uniform_int(-4, 4));
    }
    const auto basis = kernel_basis(m);
    for (const auto& v : basis) CHECK(in_kernel(m, v));
    CHECK(rank(m) + basis.size() == cols);
  }
}

TEST_CASE("fraction-free determinant examples") {
  const std::vector<std::string> vars{"a", "b", "c", "d"};
  const auto sym = [&](const std::string& n) { return MultiPoly::variable(vars, n); };
  SUBCASE("2x2 symbolic matrix gives ad - bc") {
    const PolyMatrix m{{sym("a"), sym("b")}, {sym("c"), sym("d")}};
    CHECK(determinant_fraction_free(m) == sym("a") * sym("d") - sym("b") * sym("c"));
  }
  SUBCASE("upper triangular gives the diagonal product") {
    const MultiPoly zero = MultiPoly::zero(vars);
    const PolyMatrix m{{sym("a"), sym("b"), sym("c")},
                       {zero, sym("d"), sym("b")},
                       {zero, zero, sym("a")}};
    CHECK(determinant_fraction_free(m) == sym("a") * sym("d") * sym("a"));
  }
  SUBCASE("repeated row collapses to zero") {
    const PolyMatrix m{{sym("a"), sym("b")}, {sym("a"), sym("b")}};
    CHECK(determinant_fraction_free(m).is_zero());
  }
}

TEST_CASE("determinant is multiplicative on random rational matrices") {
  SeededRng rng(103);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    RationalMatrix a(n, n), b(n, n), prod(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        a.at(r, c) = random_rational(rng, -4, 4);
        b.at(r, c) = random_rational(rng, -4, 4);
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k) acc += a.at(r, k) * b.at(k, c);
        prod.at(r, c) = acc;
      }
    }
    CHECK(determinant(prod) == determinant(a) * determinant(b));
  }
}

TEST_CASE("fraction-free and rational determinants agree on constants") {
  SeededRng rng(107);
  const std::vector<std::string> vars{"x"};
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    RationalMatrix a(n, n);
    PolyMatrix p(n, std::vector<MultiPoly>(n, MultiPoly::zero(vars)));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const Rational v(rng.uniform_int(-6, 6));
        a.at(r, c) = v;
        p[r][c] = MultiPoly::constant(vars, v);
      }
    }
    CHECK(determinant_fraction_free(p).constant_value() == determinant(a));
  }
}
