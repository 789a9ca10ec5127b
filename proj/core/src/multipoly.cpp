#include "curvegrowth/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "curvegrowth/errors.hpp"

namespace curvegrowth {

namespace {

std::size_t total_degree(const std::vector<unsigned>& exps) {
  return std::accumulate(exps.begin(), exps.end(), std::size_t{0});
}

void require_same_variables(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) {
    throw VariableMismatch("multivariate variable lists differ");
  }
}

}  // namespace

bool GradedLexGreater::operator()(const std::vector<unsigned>& a,
                                  const std::vector<unsigned>& b) const {
  const std::size_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::zero(std::vector<std::string> variables) {
  return MultiPoly(std::move(variables));
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(std::vector<unsigned>(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  std::vector<unsigned> exps(p.vars_.size(), 0);
  exps[p.variable_index(name)] = 1;
  p.add_term(exps, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, std::vector<unsigned> exponents,
                              const Rational& c) {
  MultiPoly p(std::move(variables));
  if (exponents.size() != p.vars_.size()) {
    throw ArityMismatch("exponent vector length does not match variable count");
  }
  p.add_term(exponents, c);
  return p;
}

MultiPoly MultiPoly::from_unipoly(std::vector<std::string> variables, const UniPoly& p) {
  MultiPoly out(std::move(variables));
  const std::size_t idx = out.variable_index(p.parameter());
  const auto& coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::vector<unsigned> exps(out.vars_.size(), 0);
    exps[idx] = static_cast<unsigned>(k);
    out.add_term(exps, coeffs[k]);
  }
  return out;
}

std::size_t MultiPoly::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw VariableMismatch("variable '" + name + "' is not in the ring");
}

bool MultiPoly::has_variable(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool MultiPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
  const std::vector<unsigned> zero_exps(vars_.size(), 0);
  auto it = terms_.find(zero_exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Leading term comes first in graded-lex order.
  return total_degree(terms_.begin()->first);
}

std::optional<std::size_t> MultiPoly::degree_in(const std::string& name) const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t idx = variable_index(name);
  std::size_t d = 0;
  for (const auto& [exps, c] : terms_) d = std::max<std::size_t>(d, exps[idx]);
  return d;
}

void MultiPoly::add_term(const std::vector<unsigned>& exponents, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [exps, c] : terms_) out.terms_.emplace(exps, -c);
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_variables(*this, o);
  MultiPoly out = *this;
  for (const auto& [exps, c] : o.terms_) out.add_term(exps, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require_same_variables(*this, o);
  MultiPoly out = *this;
  for (const auto& [exps, c] : o.terms_) out.add_term(exps, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_variables(*this, o);
  MultiPoly out(vars_);
  std::vector<unsigned> exps(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < vars_.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
  MultiPoly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [exps, a] : terms_) out.terms_.emplace(exps, a * c);
  return out;
}

MultiPoly MultiPoly::pow(std::size_t e) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  require_same_variables(*this, divisor);
  if (divisor.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  MultiPoly rem = *this;
  MultiPoly quot(vars_);
  const auto& lead = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& head = *rem.terms_.begin();
    std::vector<unsigned> qexps(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (head.first[i] < lead.first[i]) {
        throw InvariantViolation("polynomial division expected to be exact was not");
      }
      qexps[i] = head.first[i] - lead.first[i];
    }
    const Rational qc = head.second / lead.second;
    quot.add_term(qexps, qc);
    MultiPoly piece = divisor * monomial(vars_, qexps, qc);
    rem = rem - piece;
  }
  return quot;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) {
    throw ArityMismatch("evaluation point arity does not match variable count");
  }
  Rational acc(0);
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i] > 0) term *= point[i].pow(static_cast<long>(exps[i]));
    }
    acc += term;
  }
  return acc;
}

UniPoly MultiPoly::compose(const std::vector<UniPoly>& args) const {
  if (args.size() != vars_.size()) {
    throw ArityMismatch("composition arity does not match variable count");
  }
  std::string param = args.empty() ? std::string("t") : args.front().parameter();
  for (const auto& a : args) {
    if (a.parameter() != param) {
      throw VariableMismatch("composition arguments use different parameters");
    }
  }
  // Incrementally cached powers of each argument.
  std::vector<std::vector<UniPoly>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    powers[i].push_back(UniPoly::constant(param, Rational(1)));
  }
  const auto arg_power = [&](std::size_t i, unsigned e) -> const UniPoly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * args[i]);
    return powers[i][e];
  };
  UniPoly acc(param);
  for (const auto& [exps, c] : terms_) {
    UniPoly term = UniPoly::constant(param, c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i] > 0) term = term * arg_power(i, exps[i]);
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::homogenize(const std::string& new_var) const {
  if (is_zero()) throw ZeroPolynomial("homogenization of the zero polynomial");
  if (has_variable(new_var)) {
    throw NameCollision("homogenization variable '" + new_var + "' already occurs");
  }
  const std::size_t d = *degree();
  std::vector<std::string> vars = vars_;
  vars.push_back(new_var);
  MultiPoly out(std::move(vars));
  for (const auto& [exps, c] : terms_) {
    std::vector<unsigned> e = exps;
    e.push_back(static_cast<unsigned>(d - total_degree(exps)));
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

MultiPoly MultiPoly::leading_form() const {
  if (is_zero()) throw ZeroPolynomial("leading form of the zero polynomial");
  const std::size_t d = *degree();
  MultiPoly out(vars_);
  for (const auto& [exps, c] : terms_) {
    if (total_degree(exps) == d) out.terms_.emplace(exps, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute_value(const std::string& name, const Rational& value) const {
  const std::size_t idx = variable_index(name);
  std::vector<std::string> vars = vars_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(idx));
  MultiPoly out(std::move(vars));
  std::vector<Rational> value_powers{Rational(1)};
  for (const auto& [exps, c] : terms_) {
    while (value_powers.size() <= exps[idx]) value_powers.push_back(value_powers.back() * value);
    std::vector<unsigned> e = exps;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
    out.add_term(e, c * value_powers[exps[idx]]);
  }
  return out;
}

MultiPoly MultiPoly::drop_variable(const std::string& name) const {
  const std::size_t idx = variable_index(name);
  std::vector<std::string> vars = vars_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(idx));
  MultiPoly out(std::move(vars));
  for (const auto& [exps, c] : terms_) {
    if (exps[idx] != 0) {
      throw VariableMismatch("cannot drop variable '" + name + "': it occurs in a term");
    }
    std::vector<unsigned> e = exps;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

MultiPoly MultiPoly::embedded(std::vector<std::string> superset_vars) const {
  MultiPoly out(std::move(superset_vars));
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = out.variable_index(vars_[i]);
  for (const auto& [exps, c] : terms_) {
    std::vector<unsigned> e(out.vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) e[where[i]] = exps[i];
    out.add_term(e, c);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& name) const {
  const std::size_t idx = variable_index(name);
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  std::size_t dv = 0;
  for (const auto& [exps, c] : terms_) dv = std::max<std::size_t>(dv, exps[idx]);
  std::vector<MultiPoly> out(dv + 1, MultiPoly(rest));
  for (const auto& [exps, c] : terms_) {
    std::vector<unsigned> e = exps;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
    out[exps[idx]].add_term(e, c);
  }
  return out;
}

UniPoly MultiPoly::to_unipoly() const {
  if (vars_.size() != 1) {
    throw ArityMismatch("to_unipoly requires exactly one variable");
  }
  std::size_t d = 0;
  for (const auto& [exps, c] : terms_) d = std::max<std::size_t>(d, exps[0]);
  std::vector<Rational> coeffs(is_zero() ? 0 : d + 1, Rational(0));
  for (const auto& [exps, c] : terms_) coeffs[exps[0]] = c;
  return UniPoly(vars_[0], std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms_) {
    const bool first = out.empty();
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string monomial_text;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!monomial_text.empty()) monomial_text += "*";
      monomial_text += vars_[i];
      if (exps[i] > 1) {
        monomial_text += "^";
        monomial_text += std::to_string(exps[i]);
      }
    }
    if (monomial_text.empty()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) {
        out += mag.to_string();
        out += "*";
      }
      out += monomial_text;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace curvegrowth
