#ifndef CURVEGROWTH_RATIONAL_HPP
#define CURVEGROWTH_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "curvegrowth/integer.hpp"

namespace curvegrowth {

/// Exact rational scalar in canonical form: gcd(|num|, den) = 1 and den >= 1,
/// with zero stored as 0/1. All arithmetic is exact; comparison is exact
/// integer cross-multiplication inside GMP, never a floating approximation.
/// Values are immutable once constructed and safe to share across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p" or "p/q" in base 10.
  static Rational parse(const std::string& text);

  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

  int sign() const noexcept { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_one() const { return mpq_cmp_si(v_.get_mpq_t(), 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  /// Throws DivisionByZero when o is zero.
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Rational inverse() const;

  /// Integer power with machine-range exponent; negative exponents invert
  /// (throws DivisionByZero when the base is zero).
  Rational pow(long e) const;

  Rational abs() const;

  int compare(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()); }
  bool operator==(const Rational& o) const { return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  /// "p/q", with "/q" omitted when q = 1.
  std::string to_string() const;

  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const noexcept { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_RATIONAL_HPP
