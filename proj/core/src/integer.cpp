#include "curvegrowth/integer.hpp"

#include <ostream>

#include "curvegrowth/errors.hpp"

namespace curvegrowth {

Integer::Integer(const std::string& decimal) {
  if (mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
    throw SyntaxError("invalid integer literal '" + decimal + "'", 0);
  }
}

Integer Integer::operator-() const { return Integer(mpz_class(-v_)); }

Integer Integer::operator+(const Integer& o) const { return Integer(mpz_class(v_ + o.v_)); }

Integer Integer::operator-(const Integer& o) const { return Integer(mpz_class(v_ - o.v_)); }

Integer Integer::operator*(const Integer& o) const { return Integer(mpz_class(v_ * o.v_)); }

Integer Integer::div_trunc(const Integer& o) const {
  if (o.is_zero()) throw DivisionByZero("integer division by zero");
  return Integer(mpz_class(v_ / o.v_));
}

Integer Integer::abs() const { return Integer(mpz_class(::abs(v_))); }

Integer Integer::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Integer(std::move(r));
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return Integer(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.to_string(); }

}  // namespace curvegrowth
