#include "adjstab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace adjstab {

TInterval::TInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)), empty_(false) {
  if (lo_.sign() < 0 || hi_ > Rational(1) || lo_ > hi_) {
    throw std::invalid_argument("interval [" + lo_.to_string() + ", " + hi_.to_string() + "] is not inside [0, 1]");
  }
}

const Rational& TInterval::lo() const {
  if (empty_) throw std::logic_error("lower end of an empty interval");
  return lo_;
}

const Rational& TInterval::hi() const {
  if (empty_) throw std::logic_error("upper end of an empty interval");
  return hi_;
}

TInterval TInterval::intersect(const TInterval& other) const {
  if (empty_ || other.empty_) return {};
  Rational lo = std::max(lo_, other.lo_);
  Rational hi = std::min(hi_, other.hi_);
  if (lo > hi) return {};
  return {std::move(lo), std::move(hi)};
}

std::string TInterval::to_string() const {
  if (empty_) return "empty";
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

bool AmpleRange::admits(const Rational& t) const {
  if (closed.empty() || t < closed.lo()) return false;
  return wall ? t < *wall : t <= closed.hi();
}

Rational closure_below(const Rational& wall, int bits) {
  if (wall.sign() <= 0) throw std::invalid_argument("ampleness wall must be positive");
  const Rational scale = Rational(2).pow(bits);
  // largest integer k with k < wall * 2^bits
  const mpz_class k = (wall * scale).ceil() - 1;
  return Rational(mpq_class(k)) / scale;
}

}  // namespace adjstab
