#ifndef CURVEGROWTH_MULTIPOLY_HPP
#define CURVEGROWTH_MULTIPOLY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvegrowth/rational.hpp"
#include "curvegrowth/unipoly.hpp"

namespace curvegrowth {

/// Graded lexicographic order on exponent vectors: higher total degree
/// first, ties broken lexicographically in variable order. Terms iterate
/// leading term first, which fixes rendering and makes golden tests stable.
struct GradedLexGreater {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

/// Sparse multivariate polynomial over Rational with an ordered variable
/// list. Invariants: no stored zero coefficients, every exponent vector has
/// length equal to the number of variables, and terms are kept in canonical
/// graded-lex order. Binary operations require identical variable lists and
/// throw VariableMismatch otherwise; nothing is aligned silently.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<unsigned>, Rational, GradedLexGreater>;

  /// Zero polynomial over the given variables.
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly zero(std::vector<std::string> variables);
  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  /// The polynomial `name` itself; the name must occur in `variables`.
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> variables, std::vector<unsigned> exponents,
                            const Rational& c);
  /// Embeds a univariate polynomial as the multivariate polynomial in
  /// `variables` that only involves p's parameter (which must be listed).
  static MultiPoly from_unipoly(std::vector<std::string> variables, const UniPoly& p);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t variable_index(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The constant term (zero if absent).
  Rational constant_value() const;

  /// Total degree; nullopt for the zero polynomial (compares below all).
  std::optional<std::size_t> degree() const;
  /// Degree in one variable; nullopt for the zero polynomial.
  std::optional<std::size_t> degree_in(const std::string& name) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scale(const Rational& c) const;
  MultiPoly pow(std::size_t e) const;

  /// Exact division: *this must be divisor * q for some polynomial q, which
  /// is returned. Used by fraction-free elimination, whose intermediate
  /// divisions are exact by construction; throws InvariantViolation if a
  /// division step does not come out exact.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Substitutes args[j] for variable j; all args must share one parameter.
  UniPoly compose(const std::vector<UniPoly>& args) const;

  /// P~ with the fresh variable appended to the variable list: each term
  /// a_alpha z^alpha becomes a_alpha z^alpha s^(d-|alpha|), d = deg P.
  /// The result is homogeneous of degree d; setting the new variable to 1
  /// recovers P and setting it to 0 gives the leading form.
  MultiPoly homogenize(const std::string& new_var) const;

  /// P+ : the homogeneous part of maximal degree.
  MultiPoly leading_form() const;

  /// Evaluates one variable at a rational value; the result lives over the
  /// remaining variables.
  MultiPoly substitute_value(const std::string& name, const Rational& value) const;

  /// Removes a variable that no term uses.
  MultiPoly drop_variable(const std::string& name) const;

  /// Re-expresses the polynomial over a variable list that contains every
  /// current variable (extra variables get exponent zero).
  MultiPoly embedded(std::vector<std::string> superset_vars) const;

  /// Dense low-to-high coefficients of *this viewed as univariate in `name`
  /// over the remaining variables (the univariate-over-MultiPoly view used
  /// by resultant elimination).
  std::vector<MultiPoly> coeffs_in(const std::string& name) const;

  /// Conversion to UniPoly; requires exactly one variable.
  UniPoly to_unipoly() const;

  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Canonical rendering in the CLI expression grammar, graded-lex order.
  std::string to_string() const;

 private:
  void add_term(const std::vector<unsigned>& exponents, const Rational& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_MULTIPOLY_HPP
