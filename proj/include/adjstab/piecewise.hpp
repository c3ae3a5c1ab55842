#pragma once

#include <vector>

#include "adjstab/polynomial.hpp"
#include "adjstab/rational.hpp"

namespace adjstab {

/// A volume-type function x -> vol(L - xE) on [0, T]: polynomial pieces on
/// consecutive intervals [x_i, x_{i+1}] with x_0 = 0 and x_K = T.
///
/// Construction validates that the function is continuous, positive at 0,
/// non-increasing, and vanishes at T; it is taken to be 0 beyond T.
/// Monotonicity is certified per piece by exact sign evaluation of the
/// derivative on an adaptive dyadic refinement (depth 20): a subinterval is
/// accepted once a Taylor bound around its midpoint proves the derivative
/// non-positive, and rejected as soon as any sampled derivative is positive.
class PiecewisePoly {
 public:
  static constexpr int kMonotoneRefinementDepth = 20;

  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces);

  /// Single piece p on [0, end].
  static PiecewisePoly single(UniPoly piece, const Rational& end);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<UniPoly>& pieces() const { return pieces_; }

  /// Last breakpoint: the point at and beyond which the function is 0.
  const Rational& support_end() const { return breakpoints_.back(); }
  /// Value at 0 (the total volume).
  Rational total() const { return pieces_.front().eval(Rational(0)); }

  /// Pieces are closed on the left; the function is continuous so the value
  /// at an interior breakpoint does not depend on the convention.
  Rational eval(const Rational& x) const;

  /// Exact integral over [lo, hi], 0 <= lo <= hi <= support_end().
  Rational integrate(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<UniPoly> pieces_;
};

/// x -> c^n f(x / c) on [0, c T]: the volume function of the polarization
/// scaled by c > 0 in dimension n.
PiecewisePoly piecewise_scale(const PiecewisePoly& f, const Rational& c, int n);

/// True when `derivative` is certified (or sampled, at maximum depth)
/// non-positive on [lo, hi].  Exposed for testing.
bool derivative_nonpositive(const UniPoly& derivative, const Rational& lo, const Rational& hi,
                            int max_depth = PiecewisePoly::kMonotoneRefinementDepth);

}  // namespace adjstab
