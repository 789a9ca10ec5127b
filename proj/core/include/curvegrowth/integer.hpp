#ifndef CURVEGROWTH_INTEGER_HPP
#define CURVEGROWTH_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace curvegrowth {

/// Arbitrary-precision signed integer. GMP supplies the sign-and-magnitude
/// representation (no leading zero limbs, zero has sign 0); this wrapper
/// pins down the value semantics and error behaviour the rest of the
/// library relies on. Immutable in spirit: every operation returns a fresh
/// value, so instances are safe to share between threads.
class Integer {
 public:
  Integer() : v_(0) {}
  Integer(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  explicit Integer(const std::string& decimal);

  /// -1, 0 or +1.
  int sign() const noexcept { return mpz_sgn(v_.get_mpz_t()); }
  bool is_zero() const noexcept { return sign() == 0; }

  Integer operator-() const;
  Integer operator+(const Integer& o) const;
  Integer operator-(const Integer& o) const;
  Integer operator*(const Integer& o) const;

  /// Truncated division; throws DivisionByZero.
  Integer div_trunc(const Integer& o) const;

  Integer abs() const;
  Integer pow(unsigned long e) const;
  static Integer gcd(const Integer& a, const Integer& b);

  bool operator==(const Integer& o) const { return mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t()) == 0; }
  bool operator!=(const Integer& o) const { return !(*this == o); }
  bool operator<(const Integer& o) const { return mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t()) < 0; }
  bool operator<=(const Integer& o) const { return mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t()) <= 0; }
  bool operator>(const Integer& o) const { return o < *this; }
  bool operator>=(const Integer& o) const { return o <= *this; }

  /// Decimal rendering, e.g. "-42".
  std::string to_string() const { return v_.get_str(); }

  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  double to_double() const { return v_.get_d(); }

  const mpz_class& raw() const noexcept { return v_; }
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& n);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_INTEGER_HPP
