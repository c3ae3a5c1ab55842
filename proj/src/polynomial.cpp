#include "adjstab/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace adjstab {

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::affine_power(const Rational& a, const Rational& b, int n) {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  UniPoly base({a, b});
  UniPoly result = UniPoly::constant(1);
  for (int i = 0; i < n; ++i) result = result * base;
  return result;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out;
  out.reserve(coeffs_.size() + 1);
  out.emplace_back(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] / Rational(static_cast<long>(i + 1)));
  }
  return UniPoly(std::move(out));
}

Rational UniPoly::integrate(const Rational& lo, const Rational& hi) const {
  if (lo > hi) throw std::invalid_argument("integration bounds reversed: " + lo.to_string() + " > " + hi.to_string());
  const UniPoly anti = antiderivative();
  return anti.eval(hi) - anti.eval(lo);
}

UniPoly UniPoly::rescale_argument(const Rational& c) const {
  if (c.is_zero()) throw std::domain_error("rescale by zero");
  const Rational inv = Rational(1) / c;
  std::vector<Rational> out(coeffs_);
  Rational factor = 1;
  for (auto& coeff : out) {
    coeff *= factor;
    factor *= inv;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shift(const Rational& h) const {
  // Horner in polynomial form: p(x + h) = (...(a_n (x+h) + a_{n-1})(x+h) ...)
  const UniPoly step({h, Rational(1)});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    os << abs(c);
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os;
}

}  // namespace adjstab
