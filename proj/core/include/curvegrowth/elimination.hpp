#ifndef CURVEGROWTH_ELIMINATION_HPP
#define CURVEGROWTH_ELIMINATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "curvegrowth/curve.hpp"
#include "curvegrowth/multipoly.hpp"
#include "curvegrowth/rational.hpp"
#include "curvegrowth/unipoly.hpp"

namespace curvegrowth {

/// Resultant of f and g in the distinguished variable: the determinant of
/// their Sylvester matrix, computed fraction-free. It vanishes exactly on
/// the projection of the common zero set. At least one input must have
/// positive degree in the variable (BothConstant otherwise); a zero input
/// throws ZeroPolynomial. The result lives over the remaining variables.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Generic fiber count e of the pair map s -> (p(s), q(s)): the image curve
/// is traced e times. Probed at seeded random rational parameters via
/// univariate gcds; the probe can only overshoot at special parameters, so
/// the minimum over draws is e with overwhelming probability, and callers
/// verify the value by exact power extraction.
std::size_t parametrization_multiplicity(const UniPoly& p, const UniPoly& q, std::uint64_t seed);

/// Squarefree generator of the implicit curve of t -> (p(t), q(t)) in the
/// two requested output variables. The raw resultant is the e-th power of
/// the (irreducible) implicit equation when the parametrization has fiber
/// count e; the minimal generator is recovered by taking the exact e-th
/// root, so the result stays honest on non-injective inputs. Normalized to
/// integer-primitive with positive leading graded-lex coefficient.
MultiPoly implicitize_plane(const UniPoly& p, const UniPoly& q, const std::string& out_u,
                            const std::string& out_w, std::uint64_t seed = 0);

/// Monic-in-t squarefree polynomial P(x,t) = t^d + a_1(x) t^(d-1) + ... + a_d(x).
/// Base variable is always named "x" and fiber variable "t".
class BivariateMonic {
 public:
  /// a_j given low index = a_1; each a_j univariate in "x".
  explicit BivariateMonic(std::vector<UniPoly> lower_coeffs);

  /// Interprets a polynomial in (x_name, t_name) as monic in t, scaling away
  /// a constant leading t-coefficient; an x-dependent leading coefficient
  /// throws NonGenericProjection.
  static BivariateMonic from_polynomial(const MultiPoly& p, const std::string& x_name,
                                        const std::string& t_name);

  std::size_t t_degree() const noexcept { return coeffs_.size(); }
  /// a_j for j in [1, d].
  const UniPoly& lower_coeff(std::size_t j) const { return coeffs_.at(j - 1); }
  const std::vector<UniPoly>& lower_coeffs() const noexcept { return coeffs_; }

  /// The full polynomial over variables (x, t).
  MultiPoly to_multipoly() const;

  /// Exact evaluation P(x0, t0).
  Rational evaluate(const Rational& x0, const Rational& t0) const;

 private:
  std::vector<UniPoly> coeffs_;  // a_1 .. a_d, each in "x"
};

/// The minimal polynomial of the eliminated set {(ell(gamma(s)), h(s))}:
/// the projected graph of the pullback h over the ell-coordinate. The form
/// must realize the curve degree (deg ell(gamma) = deg Gamma) and the raw
/// resultant must be monic in t up to a constant; either failure throws
/// NonGenericProjection so the caller can retry with a fresh form. The seed
/// drives the multiplicity probe of the minimal-polynomial reduction.
BivariateMonic graph_fiber_polynomial(const ParametrizedCurve& curve, const UniPoly& h,
                                      const LinearForm& ell, std::uint64_t seed);

/// Number of distinct values h takes on the root set of u, computed as the
/// degree of the squarefree part of Res_t(u(t), w - h(t)) in w. Requires u
/// squarefree (NotSquarefree) and nonconstant (ConstantPolynomial).
std::size_t distinct_values_on_fiber(const UniPoly& u, const UniPoly& h);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_ELIMINATION_HPP
