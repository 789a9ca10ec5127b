#ifndef CURVEGROWTH_EXPRESSION_HPP
#define CURVEGROWTH_EXPRESSION_HPP

#include <string>
#include <vector>

#include "curvegrowth/multipoly.hpp"
#include "curvegrowth/rational.hpp"
#include "curvegrowth/unipoly.hpp"

namespace curvegrowth {

/// Abstract syntax tree of the polynomial expression grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | factor
///   factor := base ('^' uint)?
///   base   := uint ('/' uint)? | name | '(' expr ')'
///
/// Names match [A-Za-z][A-Za-z0-9_]*, whitespace is insignificant and
/// implicit multiplication is rejected. Power exponents are nonnegative
/// machine integers, so every tree lowers losslessly to a polynomial.
class Expression {
 public:
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Power };

  static Expression literal(Rational value);
  static Expression variable(std::string name);
  static Expression negate(Expression operand);
  static Expression add(Expression lhs, Expression rhs);
  static Expression subtract(Expression lhs, Expression rhs);
  static Expression multiply(Expression lhs, Expression rhs);
  static Expression power(Expression base, unsigned exponent);

  Kind kind() const noexcept { return kind_; }
  const Rational& literal_value() const { return value_; }
  const std::string& name() const { return name_; }
  unsigned exponent() const { return exponent_; }
  const Expression& child(std::size_t i) const { return children_.at(i); }

  /// Lowers to a multivariate polynomial over the given variable ring.
  MultiPoly to_multipoly(const std::vector<std::string>& variables) const;

  /// Lowers to a univariate polynomial in the given parameter.
  UniPoly to_unipoly(const std::string& parameter) const;

 private:
  Expression() = default;

  Kind kind_ = Kind::Literal;
  Rational value_;
  std::string name_;
  unsigned exponent_ = 0;
  std::vector<Expression> children_;
};

/// Parses `src` against the grammar. Unknown names throw UnknownVariable;
/// malformed input throws SyntaxError carrying the byte offset.
Expression parse_expression(const std::string& src, const std::vector<std::string>& allowed_vars);

/// Convenience: parse and lower in one step.
MultiPoly parse_multipoly(const std::string& src, const std::vector<std::string>& variables);
UniPoly parse_unipoly(const std::string& src, const std::string& parameter);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_EXPRESSION_HPP
