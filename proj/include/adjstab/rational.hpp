#pragma once

// Exact rational scalar backed by GMP.
//
// Values are always held in lowest terms with a positive denominator; zero
// is 0/1.  Every invariant in this library is computed with this type, and
// floating point only appears when a value is rendered for display.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adjstab {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of a scalar
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p" or "-p/q".  Whitespace around the tokens is not
  /// accepted; the denominator must be nonzero.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(int exponent) const;

  /// Exact n-th root if one exists in Q (n >= 1).  Negative values only
  /// have roots for odd n.
  std::optional<Rational> nth_root(unsigned n) const;

  /// Largest integer <= value, and smallest integer >= value.
  mpz_class floor() const;
  mpz_class ceil() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Fixed-point decimal with `precision` digits after the point, rounded
  /// half away from zero.  Computed exactly, so output is reproducible.
  std::string to_decimal(int precision) const;

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace adjstab
