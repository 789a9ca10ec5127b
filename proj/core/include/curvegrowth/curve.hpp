#ifndef CURVEGROWTH_CURVE_HPP
#define CURVEGROWTH_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvegrowth/rational.hpp"
#include "curvegrowth/rng.hpp"
#include "curvegrowth/unipoly.hpp"

namespace curvegrowth {

/// Polynomial parametrization gamma : C -> C^m of an algebraic curve.
/// Invariants enforced at construction: one component per variable name,
/// all components over one parameter, at least one component nonconstant
/// (so the curve degree max_j deg gamma_j is >= 1), distinct variable
/// names, and the parameter name distinct from the variable names.
class ParametrizedCurve {
 public:
  ParametrizedCurve(std::vector<std::string> variable_names, std::vector<UniPoly> gamma);

  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const std::string& parameter() const noexcept { return gamma_.front().parameter(); }
  const std::vector<UniPoly>& components() const noexcept { return gamma_; }
  const UniPoly& component(std::size_t j) const { return gamma_.at(j); }
  std::size_t dimension() const noexcept { return gamma_.size(); }

  /// deg Gamma = max_j deg gamma_j.
  std::size_t degree() const;

  /// Exact image point at a rational parameter value.
  std::vector<Rational> point_at(const Rational& t) const;

 private:
  std::vector<std::string> names_;
  std::vector<UniPoly> gamma_;
};

/// Linear form ell(z) = sum coeffs_j z_j; not all coefficients zero.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// ell composed with the parametrization: a univariate polynomial in the
  /// curve parameter.
  UniPoly pullback(const ParametrizedCurve& c) const;

  Rational apply(const std::vector<Rational>& point) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Direction of the line at infinity contributed by the single branch of a
/// polynomial parametrization, normalized so the first nonzero entry is 1.
class ConeDirection {
 public:
  explicit ConeDirection(std::vector<Rational> direction);

  const std::vector<Rational>& direction() const noexcept { return dir_; }

  /// True when only the final coordinate is nonzero.
  bool is_last_axis() const;
  bool last_coordinate_zero() const { return dir_.back().is_zero(); }

  bool operator==(const ConeDirection& o) const { return dir_ == o.dir_; }

 private:
  std::vector<Rational> dir_;
};

std::size_t curve_degree(const ParametrizedCurve& c);

struct NormalizationResult {
  bool ok;                          ///< true iff generically injective
  std::size_t generic_fiber_count;  ///< e = sheet count of the parametrization
};

/// Estimates the generic fiber count e of the parametrization by probing:
/// a random degree-realizing linear form gives a generic fiber, a second
/// independent form separates the curve points over it, and e is the ratio
/// of parameter-fiber size to distinct-value count. Deterministic for a
/// fixed seed; throws InconclusiveAfterRetries after 8 degenerate probes.
NormalizationResult normalization_check(const ParametrizedCurve& c, std::uint64_t seed);

struct InjectivityResult {
  bool injective;
  /// A glued parameter pair (a != b with gamma(a) = gamma(b)) when one with
  /// small rational coordinates exists; the search is best-effort and a
  /// missing witness does not weaken the verdict.
  std::optional<std::pair<Rational, Rational>> witness;
};

/// Decides injectivity of the parametrization. For plane curves the answer
/// is exact: gluings are common zeros of the divided differences
/// g_j(s1,s2) = (gamma_j(s1) - gamma_j(s2))/(s1 - s2), and in the sheared
/// coordinates (u, s) = (s1 - s2, s2) both divided differences have constant
/// leading coefficients in s, so the u-resultant vanishes at u0 != 0 exactly
/// when a gluing with parameter offset u0 exists. In higher dimension the
/// test runs on seeded random plane projections: an injective projection
/// certifies injectivity, a verified glued pair certifies failure, and
/// anything else retries (throws InconclusiveAfterRetries after 8 rounds).
InjectivityResult injectivity_check(const ParametrizedCurve& c, std::uint64_t seed);

/// The graph curve t -> (gamma(t), h(t)) in m+1 coordinates; the new
/// coordinate gets the first unused name among w, w1, w2, ...
ParametrizedCurve graph_curve(const ParametrizedCurve& c, const UniPoly& h);

/// Top-degree coefficient vector across components, normalized: the
/// asymptotic direction of the one branch at infinity.
ConeDirection cone_direction(const ParametrizedCurve& c);

/// Random linear form with integer coefficients in [-1000, 1000], not all
/// zero, drawn from the seeded stream.
LinearForm random_linear_form(SeededRng& rng, std::size_t arity);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_CURVE_HPP
