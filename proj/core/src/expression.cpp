#include "curvegrowth/expression.hpp"

#include <algorithm>
#include <cctype>

#include "curvegrowth/errors.hpp"

namespace curvegrowth {

Expression Expression::literal(Rational value) {
  Expression e;
  e.kind_ = Kind::Literal;
  e.value_ = std::move(value);
  return e;
}

Expression Expression::variable(std::string name) {
  Expression e;
  e.kind_ = Kind::Variable;
  e.name_ = std::move(name);
  return e;
}

Expression Expression::negate(Expression operand) {
  Expression e;
  e.kind_ = Kind::Negate;
  e.children_.push_back(std::move(operand));
  return e;
}

Expression Expression::add(Expression lhs, Expression rhs) {
  Expression e;
  e.kind_ = Kind::Add;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

Expression Expression::subtract(Expression lhs, Expression rhs) {
  Expression e;
  e.kind_ = Kind::Subtract;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

Expression Expression::multiply(Expression lhs, Expression rhs) {
  Expression e;
  e.kind_ = Kind::Multiply;
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

Expression Expression::power(Expression base, unsigned exponent) {
  Expression e;
  e.kind_ = Kind::Power;
  e.exponent_ = exponent;
  e.children_.push_back(std::move(base));
  return e;
}

MultiPoly Expression::to_multipoly(const std::vector<std::string>& variables) const {
  switch (kind_) {
    case Kind::Literal:
      return MultiPoly::constant(variables, value_);
    case Kind::Variable:
      return MultiPoly::variable(variables, name_);
    case Kind::Negate:
      return -children_[0].to_multipoly(variables);
    case Kind::Add:
      return children_[0].to_multipoly(variables) + children_[1].to_multipoly(variables);
    case Kind::Subtract:
      return children_[0].to_multipoly(variables) - children_[1].to_multipoly(variables);
    case Kind::Multiply:
      return children_[0].to_multipoly(variables) * children_[1].to_multipoly(variables);
    case Kind::Power:
      return children_[0].to_multipoly(variables).pow(exponent_);
  }
  throw Error("unreachable expression kind");
}

UniPoly Expression::to_unipoly(const std::string& parameter) const {
  switch (kind_) {
    case Kind::Literal:
      return UniPoly::constant(parameter, value_);
    case Kind::Variable:
      if (name_ != parameter) throw UnknownVariable(name_, 0);
      return UniPoly::variable(parameter);
    case Kind::Negate:
      return -children_[0].to_unipoly(parameter);
    case Kind::Add:
      return children_[0].to_unipoly(parameter) + children_[1].to_unipoly(parameter);
    case Kind::Subtract:
      return children_[0].to_unipoly(parameter) - children_[1].to_unipoly(parameter);
    case Kind::Multiply:
      return children_[0].to_unipoly(parameter) * children_[1].to_unipoly(parameter);
    case Kind::Power:
      return children_[0].to_unipoly(parameter).pow(exponent_);
  }
  throw Error("unreachable expression kind");
}

namespace {

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& allowed)
      : src_(src), allowed_(allowed) {}

  Expression run() {
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw SyntaxError("unexpected input after expression", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == src_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected an unsigned integer", start);
    return src_.substr(start, pos_ - start);
  }

  Expression parse_expr() {
    Expression lhs = parse_term();
    while (true) {
      if (consume('+')) {
        lhs = Expression::add(std::move(lhs), parse_term());
      } else if (consume('-')) {
        lhs = Expression::subtract(std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_term() {
    Expression lhs = parse_unary();
    while (consume('*')) {
      lhs = Expression::multiply(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expression parse_unary() {
    if (consume('-')) return Expression::negate(parse_unary());
    return parse_factor();
  }

  Expression parse_factor() {
    Expression base = parse_base();
    if (consume('^')) {
      skip_ws();
      const std::size_t off = pos_;
      const std::string digits = read_uint();
      unsigned long value = 0;
      for (char c : digits) {
        value = value * 10 + static_cast<unsigned long>(c - '0');
        if (value > 1000000) throw SyntaxError("exponent out of range", off);
      }
      return Expression::power(std::move(base), static_cast<unsigned>(value));
    }
    return base;
  }

  Expression parse_base() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = read_uint();
      if (consume('/')) {
        const std::size_t off = pos_;
        const std::string den = read_uint();
        const Integer d(den);
        if (d.is_zero()) throw SyntaxError("zero denominator in literal", off);
        return Expression::literal(Rational(Integer(num), d));
      }
      return Expression::literal(Rational(Integer(num), Integer(1)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = src_.substr(start, pos_ - start);
      if (std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) {
        throw UnknownVariable(name, start);
      }
      return Expression::variable(name);
    }
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      skip_ws();
      if (!consume(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    throw SyntaxError("expected a number, name or '('", pos_);
  }

  const std::string& src_;
  const std::vector<std::string>& allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(const std::string& src,
                            const std::vector<std::string>& allowed_vars) {
  return Parser(src, allowed_vars).run();
}

MultiPoly parse_multipoly(const std::string& src, const std::vector<std::string>& variables) {
  return parse_expression(src, variables).to_multipoly(variables);
}

UniPoly parse_unipoly(const std::string& src, const std::string& parameter) {
  return parse_expression(src, {parameter}).to_unipoly(parameter);
}

}  // namespace curvegrowth
