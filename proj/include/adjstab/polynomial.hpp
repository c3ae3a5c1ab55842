#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "adjstab/rational.hpp"

namespace adjstab {

/// Univariate polynomial with rational coefficients, ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coefficients);
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  /// (a + b x)^n
  static UniPoly affine_power(const Rational& a, const Rational& b, int n);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  UniPoly derivative() const;
  /// Antiderivative with zero constant term.
  UniPoly antiderivative() const;
  /// Exact integral over [lo, hi]; throws if lo > hi.
  Rational integrate(const Rational& lo, const Rational& hi) const;

  /// p(x) -> p(x / c), c != 0.
  UniPoly rescale_argument(const Rational& c) const;
  /// p(x) -> p(x + h).
  UniPoly shift(const Rational& h) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly p, const Rational& c) { return p *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly p) { return p *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace adjstab
