#include "curvegrowth/rational.hpp"

#include <ostream>

#include "curvegrowth/errors.hpp"

namespace curvegrowth {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) {
    throw SyntaxError("invalid rational literal '" + text + "'", 0);
  }
  if (mpz_sgn(v.get_den().get_mpz_t()) == 0) {
    throw DivisionByZero("rational literal with zero denominator");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }

Rational Rational::operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }

Rational Rational::operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  mpq_class r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  // num/den already coprime, so powers are coprime: canonical by construction.
  return Rational(std::move(r));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace curvegrowth
