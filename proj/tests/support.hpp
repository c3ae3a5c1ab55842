#pragma once

// Shared generators and independent oracles for the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adjstab/rational.hpp"

namespace adjstab::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2026ULL);
  return engine;
}

inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Uniform-ish rational with numerator in [-bound, bound] and denominator in [1, max_den].
inline Rational random_rational(long bound = 50, long max_den = 24) {
  return Rational(uniform_int(-bound, bound), uniform_int(1, max_den));
}

/// Rational in [lo, hi] with denominator at most max_den.
inline Rational random_in(const Rational& lo, const Rational& hi, long max_den = 48) {
  const long den = uniform_int(1, max_den);
  const Rational u(uniform_int(0, den), den);
  return lo + (hi - lo) * u;
}

inline Rational random_positive(long bound = 50, long max_den = 24) {
  return Rational(uniform_int(1, bound), uniform_int(1, max_den));
}

inline Rational r(const char* text) { return Rational::parse(text); }

/// Brute force over the exponent vectors of n + 1 variables with the given
/// total degree.  `order` gets the exponent vector; returns sum of orders and
/// the number of monomials.
template <typename Order>
std::pair<std::int64_t, std::int64_t> enumerate_monomials(int n, int degree, Order order) {
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t sum = 0;
  std::int64_t count = 0;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      e[static_cast<std::size_t>(i)] = left;
      sum += order(e);
      ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return {sum, count};
}

/// S_m by direct enumeration: ord along {x0 = 0} is e0; at [1:0:...:0] it is
/// the total degree of the other variables.
inline Rational brute_force_s_m(int n, int degree_per_level, int m, bool point) {
  const int degree = degree_per_level * m;
  auto [sum, count] = enumerate_monomials(n, degree, [&](const std::vector<int>& e) {
    return point ? static_cast<std::int64_t>(degree - e[0]) : static_cast<std::int64_t>(e[0]);
  });
  return Rational(static_cast<long>(sum), static_cast<long>(count) * m);
}

}  // namespace adjstab::testing
