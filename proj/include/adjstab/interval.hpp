#pragma once

#include <optional>
#include <string>

#include "adjstab/rational.hpp"

namespace adjstab {

/// Closed subinterval [lo, hi] of [0, 1], or empty.
class TInterval {
 public:
  /// The empty interval.
  TInterval() = default;
  TInterval(Rational lo, Rational hi);

  static TInterval unit() { return {Rational(0), Rational(1)}; }

  bool empty() const { return empty_; }
  const Rational& lo() const;
  const Rational& hi() const;

  bool contains(const Rational& t) const { return !empty_ && lo_ <= t && t <= hi_; }

  TInterval intersect(const TInterval& other) const;

  /// "[lo, hi]" or "empty".
  std::string to_string() const;

  friend bool operator==(const TInterval& a, const TInterval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
  bool empty_ = true;
};

/// The t-range on which the polarization is ample.  When ampleness fails
/// past an open wall inside [0, 1], `closed` ends at the largest multiple of
/// 2^-kWallResolutionBits strictly below the wall, and the wall itself is
/// reported separately.
struct AmpleRange {
  static constexpr int kWallResolutionBits = 20;

  TInterval closed;
  std::optional<Rational> wall;

  /// Membership against the true (possibly half-open) range.
  bool admits(const Rational& t) const;
};

/// Largest k / 2^bits strictly below `wall` (wall > 0).
Rational closure_below(const Rational& wall, int bits = AmpleRange::kWallResolutionBits);

}  // namespace adjstab
