#ifndef CURVEGROWTH_GROWTH_HPP
#define CURVEGROWTH_GROWTH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "curvegrowth/curve.hpp"
#include "curvegrowth/elimination.hpp"
#include "curvegrowth/multipoly.hpp"
#include "curvegrowth/rational.hpp"
#include "curvegrowth/unipoly.hpp"

namespace curvegrowth {

/// A function on a parametrized curve, certified by its polynomial pullback
/// h = f o gamma: the pullback being a polynomial is the algebraic-graph
/// (Liouville growth) condition for the restriction. When the function was
/// given as a rational representative P/Q, the pair is kept alongside; a
/// function may equally be specified by its pullback alone.
struct CurveFunction {
  ParametrizedCurve curve;
  std::optional<MultiPoly> numerator;
  std::optional<MultiPoly> denominator;
  UniPoly pullback;
};

/// Restricts P/Q to the curve. Throws DenominatorVanishesOnCurve when the
/// denominator pulls back to zero and NotCHolomorphic when the pullback
/// division leaves a remainder (the function blows up along the curve, so
/// its graph is not an algebraic function graph).
CurveFunction restrict_to_curve(const ParametrizedCurve& curve, const MultiPoly& numerator,
                                const MultiPoly& denominator);

/// The function on the curve determined directly by a polynomial pullback.
CurveFunction pullback_function(const ParametrizedCurve& curve, UniPoly pullback);

/// Growth exponent at infinity: deg h / deg Gamma in lowest terms, 0 for a
/// constant function.
Rational growth_exponent(const CurveFunction& cf);

/// Generic fiber cardinality deg h; undefined (ConstantFunction) for
/// constant functions, whose fibers are infinite.
std::size_t geometric_degree(const CurveFunction& cf);

/// delta(P) = max_j (deg a_j / j) over the nonzero lower coefficients; the
/// growth exponent of the root function of P. Zero when all are constant.
Rational delta(const BivariateMonic& p);

/// Independent route to the growth exponent: draws a degree-realizing
/// linear form, eliminates down to the fiber polynomial of the projected
/// graph and returns its delta. Agrees exactly with growth_exponent on
/// every normalized curve. Requires normalization (CurveNotNormalized) and
/// surfaces NonGenericProjection after 8 failed draws.
Rational growth_via_elimination(const CurveFunction& cf, std::uint64_t seed);

struct TwBoundCheck {
  Rational bound;  ///< deg graph curve - deg curve + 1
  bool holds;      ///< growth exponent <= bound
};

TwBoundCheck tw_bound_check(const CurveFunction& cf);

/// The four equivalent descriptions of growth exponent <= 1:
///   [0] the exponent itself is <= 1;
///   [1] the curve and its graph curve have equal degree;
///   [2] the graph cone at infinity meets the value axis only at 0;
///   [3] the fiber polynomial keeps total degree equal to its t-degree
///       (t^d survives in the leading form).
/// The flags are provably all equal; callers treat disagreement as a bug.
std::array<bool, 4> le_one_equivalences(const CurveFunction& cf, std::uint64_t seed);

struct BezoutReport {
  std::size_t geometric_degree;      ///< max_j deg h_j
  Rational growth;                   ///< max_j growth exponent
  bool equality_holds;               ///< d = deg A * growth
  std::optional<bool> bound_holds;   ///< d <= deg A * growth, single-component only
};

/// Treats the component list as one mapping to C^n; every component must
/// restrict and at least one must be nonconstant (AllConstant otherwise).
BezoutReport bezout_mapping_report(const ParametrizedCurve& curve,
                                   const std::vector<std::pair<MultiPoly, MultiPoly>>& components);

struct FiberInjectivityReport {
  std::size_t passed;   ///< trials whose distinct-value count hit deg A
  std::size_t counted;  ///< trials that were not skipped
  double success_rate;
  bool pass;  ///< success_rate >= 0.95
};

/// Desk-scale check of generic-fiber injectivity: each trial draws a
/// degree-realizing form and a rational base point, skips non-squarefree
/// fibers, and counts the distinct pullback values on the fiber. Throws
/// InconclusiveAfterRetries when every trial skips.
FiberInjectivityReport fiber_injectivity_check(const CurveFunction& cf, std::uint64_t seed,
                                               std::size_t trials);

/// Finds (P, Q) with deg Q <= deg A - 1, deg P <= max_num_degree and
/// P o gamma = h * (Q o gamma) exactly, by solving the coefficient-matching
/// linear system and picking the kernel vector with the smallest deg Q
/// (ties: lexicographically smallest coefficient vector). The numerator
/// degree search is incremental from 0; NoRepresentativeFound when the cap
/// is exhausted. Requires an injective parametrization (CurveNotInjective).
std::pair<MultiPoly, MultiPoly> rationalize(const ParametrizedCurve& curve, const UniPoly& h,
                                            std::size_t max_num_degree);

/// All growth exponents realized by polynomial pullbacks of degree 1 to
/// max_pullback_degree: { reduced j / deg Gamma }.
std::set<Rational> enumerate_growth_exponents(const ParametrizedCurve& curve,
                                              std::size_t max_pullback_degree);

/// Floating cross-check: the regression slope of log|h(t)| against
/// log||gamma(t)|| over the magnitude ladder. Within 0.02 of the growth
/// exponent on the default ladder {1e3, 1e4, 1e5, 1e6}; the same slope
/// bounds the function from below, the two-sided growth behaviour of a
/// single polynomial branch. Throws OverflowAtSample when an evaluation
/// leaves double range (callers lower the ladder).
double sample_growth_estimate(const CurveFunction& cf, const std::vector<Rational>& magnitudes);

std::vector<Rational> default_sample_ladder();

/// Degree of the graph of a nonconstant polynomial: equals deg F. The
/// implementation cross-checks deg(t - F) = deg F through the leading form.
std::size_t graph_degree_of_polynomial(const MultiPoly& f);

struct GrowthReport {
  Rational growth_exponent;
  std::size_t geometric_degree;  ///< 0 for a constant function
  std::size_t curve_degree;
  std::size_t graph_degree;
  Rational tw_bound;
  bool tw_bound_holds;
  bool bezout_equality_holds;
  std::array<bool, 4> le_one_flags;
  Rational delta_cross_check;
  ConeDirection cone_direction_graph;
};

/// Runs the whole pipeline on one function and cross-checks every identity:
/// the elimination route must reproduce the growth exponent, the geometric
/// degree must equal deg A times the exponent, the degree bound must hold
/// and the four equivalence flags must agree. Any failure throws
/// InvariantViolation naming the stage.
GrowthReport full_report(const ParametrizedCurve& curve, const MultiPoly& numerator,
                         const MultiPoly& denominator, std::uint64_t seed);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_GROWTH_HPP
