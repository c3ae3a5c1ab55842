#include "adjstab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace adjstab {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(num)));

  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::optional<Rational> Rational::nth_root(unsigned n) const {
  if (n == 0) throw std::invalid_argument("zeroth root");
  if (sign() < 0 && n % 2 == 0) return std::nullopt;
  const mpz_class num = numerator();
  mpz_class abs_num = ::abs(num);
  mpz_class root_num;
  mpz_class root_den;
  if (mpz_root(root_num.get_mpz_t(), abs_num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(root_den.get_mpz_t(), denominator().get_mpz_t(), n) == 0) return std::nullopt;
  if (num < 0) root_num = -root_num;
  return Rational(mpq_class(root_num, root_den));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::to_decimal(int precision) const {
  if (precision < 0) throw std::invalid_argument("negative decimal precision");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));

  // round(|x| * 10^p) half away from zero: floor((2|num|*scale + den) / (2 den))
  const mpz_class abs_num = ::abs(numerator());
  const mpz_class den = denominator();
  mpz_class scaled = (2 * abs_num * scale + den);
  mpz_class twice_den = 2 * den;
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_mpz_t(), twice_den.get_mpz_t());

  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= precision) {
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  }
  std::string out;
  if (sign() < 0 && rounded != 0) out.push_back('-');
  const std::size_t int_len = digits.size() - static_cast<std::size_t>(precision);
  out.append(digits, 0, int_len);
  if (precision > 0) {
    out.push_back('.');
    out.append(digits, int_len, std::string::npos);
  }
  return out;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace adjstab
