#ifndef CURVEGROWTH_TESTS_SUPPORT_HPP
#define CURVEGROWTH_TESTS_SUPPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "curvegrowth/curve.hpp"
#include "curvegrowth/multipoly.hpp"
#include "curvegrowth/rational.hpp"
#include "curvegrowth/rng.hpp"
#include "curvegrowth/unipoly.hpp"

namespace curvegrowth::testing {

inline Rational random_rational(SeededRng& rng, long lo = -9, long hi = 9) {
  return Rational(rng.uniform_int(lo, hi), rng.uniform_int(1, 5));
}

inline Rational random_nonzero_rational(SeededRng& rng, long lo = -9, long hi = 9) {
  while (true) {
    Rational r = random_rational(rng, lo, hi);
    if (!r.is_zero()) return r;
  }
}

/// Random integer-coefficient polynomial of exact degree `degree`.
inline UniPoly random_unipoly_of_degree(SeededRng& rng, const std::string& param,
                                        std::size_t degree, long lo = -9, long hi = 9) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  for (std::size_t i = 0; i < degree; ++i) coeffs[i] = Rational(rng.uniform_int(lo, hi));
  long lead = 0;
  while (lead == 0) lead = rng.uniform_int(lo, hi);
  coeffs[degree] = Rational(lead);
  return UniPoly(param, std::move(coeffs));
}

inline UniPoly random_unipoly(SeededRng& rng, const std::string& param, std::size_t max_degree,
                              long lo = -9, long hi = 9) {
  const std::size_t d = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(max_degree)));
  return random_unipoly_of_degree(rng, param, d, lo, hi);
}

/// Random sparse multivariate polynomial, nonzero.
inline MultiPoly random_multipoly(SeededRng& rng, const std::vector<std::string>& vars,
                                  unsigned max_degree, std::size_t max_terms = 6) {
  while (true) {
    MultiPoly p = MultiPoly::zero(vars);
    const std::size_t terms = static_cast<std::size_t>(
        rng.uniform_int(1, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
      std::vector<unsigned> exps(vars.size(), 0);
      unsigned budget = max_degree;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned e = static_cast<unsigned>(rng.uniform_int(0, static_cast<long>(budget)));
        exps[i] = e;
        budget -= e;
      }
      const Rational c(rng.uniform_int(-9, 9));
      p = p + MultiPoly::monomial(vars, exps, c);
    }
    if (!p.is_zero()) return p;
  }
}

/// Random parametrized curve: m components of degree <= max_degree with
/// integer coefficients in [-9, 9], at least one component nonconstant.
inline ParametrizedCurve random_curve(SeededRng& rng, std::size_t m, std::size_t max_degree,
                                      const std::string& param = "t") {
  static const std::vector<std::string> pool{"x", "y", "z", "v"};
  std::vector<std::string> names(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  while (true) {
    std::vector<UniPoly> gamma;
    bool nonconstant = false;
    for (std::size_t j = 0; j < m; ++j) {
      gamma.push_back(random_unipoly(rng, param, max_degree));
      nonconstant = nonconstant || !gamma.back().is_constant();
    }
    if (!nonconstant) continue;
    return ParametrizedCurve(names, std::move(gamma));
  }
}

/// Instance of the oracle-equivalence shape: a normalized random curve
/// (m in {2,3}, deg gamma <= 6) plus a nonconstant pullback of degree <= 8.
struct RandomInstance {
  ParametrizedCurve curve;
  UniPoly pullback;
};

inline RandomInstance random_normalized_instance(SeededRng& rng) {
  while (true) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform_int(2, 3));
    ParametrizedCurve curve = random_curve(rng, m, 6);
    if (curve.degree() < 1) continue;
    const NormalizationResult norm = normalization_check(curve, rng.next_u64());
    if (!norm.ok) continue;
    const std::size_t dh = static_cast<std::size_t>(rng.uniform_int(1, 8));
    UniPoly h = random_unipoly_of_degree(rng, "t", dh);
    return {std::move(curve), std::move(h)};
  }
}

inline ParametrizedCurve cusp_curve() {
  return ParametrizedCurve({"x", "y"},
                           {UniPoly("t", {Rational(0), Rational(0), Rational(1)}),
                            UniPoly("t", {Rational(0), Rational(0), Rational(0), Rational(1)})});
}

}  // namespace curvegrowth::testing

#endif  // CURVEGROWTH_TESTS_SUPPORT_HPP
