#include "curvegrowth/unipoly.hpp"

#include <ostream>

#include "curvegrowth/errors.hpp"

namespace curvegrowth {

namespace {

void require_same_parameter(const UniPoly& a, const UniPoly& b) {
  if (a.parameter() != b.parameter()) {
    throw VariableMismatch("univariate parameters differ: '" + a.parameter() + "' vs '" +
                           b.parameter() + "'");
  }
}

}  // namespace

UniPoly::UniPoly(std::string parameter) : param_(std::move(parameter)) {}

UniPoly::UniPoly(std::string parameter, std::vector<Rational> coeffs)
    : param_(std::move(parameter)), c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(std::string parameter, const Rational& c) {
  return UniPoly(std::move(parameter), {c});
}

UniPoly UniPoly::monomial(std::string parameter, const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UniPoly(std::move(parameter), std::move(v));
}

UniPoly UniPoly::variable(std::string parameter) {
  return monomial(std::move(parameter), Rational(1), 1);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

Rational UniPoly::coeff(std::size_t k) const {
  if (k >= c_.size()) return Rational(0);
  return c_[k];
}

Rational UniPoly::leading_coeff() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(-a);
  return UniPoly(param_, std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require_same_parameter(*this, o);
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(param_, std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require_same_parameter(*this, o);
  if (is_zero() || o.is_zero()) return UniPoly(param_);
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      v[i + j] += c_[i] * o.c_[j];
    }
  }
  return UniPoly(param_, std::move(v));
}

UniPoly UniPoly::scale(const Rational& c) const {
  if (c.is_zero()) return UniPoly(param_);
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(a * c);
  return UniPoly(param_, std::move(v));
}

UniPoly UniPoly::pow(std::size_t e) const {
  UniPoly result = constant(param_, Rational(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::shift_up(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : UniPoly(param_);
  std::vector<Rational> v(c_.size() + k, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return UniPoly(param_, std::move(v));
}

Rational UniPoly::evaluate(const Rational& point) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * point + c_[i];
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(param_);
  std::vector<Rational> v;
  v.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(c_[i] * Rational(static_cast<long>(i)));
  }
  return UniPoly(param_, std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scale(leading_coeff().inverse());
}

UniPoly UniPoly::renamed(std::string parameter) const {
  return UniPoly(std::move(parameter), c_);
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& a = c_[i];
    if (a.is_zero()) continue;
    const bool first = out.empty();
    const Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) out += "-";
    } else {
      out += a.sign() < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) {
        out += mag.to_string();
        out += "*";
      }
      out += param_;
      if (i > 1) {
        out += "^";
        out += std::to_string(i);
      }
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q) {
  require_same_parameter(p, q);
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto dq = *q.degree();
  std::vector<Rational> rem(p.coefficients());
  if (rem.size() < dq + 1) return {UniPoly(p.parameter()), p};
  const Rational lc_inv = q.leading_coeff().inverse();
  std::vector<Rational> quot(rem.size() - dq, Rational(0));
  for (std::size_t i = rem.size(); i-- > dq;) {
    if (rem[i].is_zero()) continue;
    const Rational factor = rem[i] * lc_inv;
    quot[i - dq] = factor;
    for (std::size_t j = 0; j <= dq; ++j) {
      rem[i - dq + j] -= factor * q.coeff(j);
    }
  }
  return {UniPoly(p.parameter(), std::move(quot)), UniPoly(p.parameter(), std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  require_same_parameter(a, b);
  UniPoly f = a, g = b;
  while (!g.is_zero()) {
    UniPoly r = divrem(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.is_zero() ? f : f.monic();
}

SquarefreeParts gcd_squarefree(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
  if (p.is_constant()) {
    return {UniPoly::constant(p.parameter(), Rational(1)),
            UniPoly::constant(p.parameter(), Rational(1))};
  }
  UniPoly g = gcd(p, p.derivative());
  UniPoly part = divrem(p, g).first.monic();
  return {std::move(g), std::move(part)};
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  return gcd(p, p.derivative()).is_constant();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

}  // namespace curvegrowth
