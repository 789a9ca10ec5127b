#ifndef CURVEGROWTH_UNIPOLY_HPP
#define CURVEGROWTH_UNIPOLY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvegrowth/rational.hpp"

namespace curvegrowth {

/// Dense univariate polynomial over Rational, coefficients stored low to
/// high with a nonzero leading coefficient (the zero polynomial has an empty
/// coefficient list). The degree of the zero polynomial is not a number:
/// degree() returns std::nullopt for it, and std::optional's ordering makes
/// nullopt compare below every finite degree, which is exactly the
/// "minus infinity" convention the degree formulas need.
class UniPoly {
 public:
  /// Zero polynomial in the given parameter.
  explicit UniPoly(std::string parameter);
  /// Polynomial from low-to-high coefficients; trailing zeros are trimmed.
  UniPoly(std::string parameter, std::vector<Rational> coeffs);

  static UniPoly constant(std::string parameter, const Rational& c);
  /// c * parameter^k.
  static UniPoly monomial(std::string parameter, const Rational& c, std::size_t k);
  /// The identity map t -> t.
  static UniPoly variable(std::string parameter);

  const std::string& parameter() const noexcept { return param_; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of parameter^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  /// Leading coefficient; throws ZeroPolynomial on the zero polynomial.
  Rational leading_coeff() const;
  Rational constant_term() const { return coeff(0); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scale(const Rational& c) const;
  UniPoly pow(std::size_t e) const;

  /// Shift by parameter^k (multiply by the monomial).
  UniPoly shift_up(std::size_t k) const;

  Rational evaluate(const Rational& point) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  bool operator==(const UniPoly& o) const { return param_ == o.param_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Canonical rendering in the CLI expression grammar, highest power first.
  std::string to_string() const;

  /// Same coefficients in another parameter name.
  UniPoly renamed(std::string parameter) const;

 private:
  void trim();

  std::string param_;
  std::vector<Rational> c_;
};

/// Quotient and remainder with deg rem < deg divisor; exact rational
/// arithmetic throughout. Throws DivisionByZero when divisor is zero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q);

/// Monic greatest common divisor (Euclid over the rationals);
/// gcd(0, 0) is the zero polynomial.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeParts {
  UniPoly gcd_with_derivative;  ///< monic gcd(p, p')
  UniPoly squarefree_part;      ///< monic p / gcd(p, p'): same roots, all simple
};

/// Throws ZeroPolynomial when p is zero.
SquarefreeParts gcd_squarefree(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_UNIPOLY_HPP
