#include "adjstab/piecewise.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adjstab {

namespace {

// Upper bound of p on [m - r, m + r] from its Taylor expansion at m.
Rational taylor_upper_bound(const UniPoly& p, const Rational& mid, const Rational& radius) {
  const UniPoly local = p.shift(mid);
  const auto& c = local.coefficients();
  if (c.empty()) return Rational(0);
  Rational bound = c[0];
  Rational power = radius;
  for (std::size_t k = 1; k < c.size(); ++k) {
    bound += abs(c[k]) * power;
    power *= radius;
  }
  return bound;
}

bool nonpositive_on(const UniPoly& d, const Rational& lo, const Rational& hi, int depth_left) {
  const Rational mid = (lo + hi) / Rational(2);
  if (d.eval(lo).sign() > 0 || d.eval(hi).sign() > 0 || d.eval(mid).sign() > 0) return false;
  if (taylor_upper_bound(d, mid, (hi - lo) / Rational(2)).sign() <= 0) return true;
  if (depth_left == 0) return true;
  return nonpositive_on(d, lo, mid, depth_left - 1) && nonpositive_on(d, mid, hi, depth_left - 1);
}

}  // namespace

bool derivative_nonpositive(const UniPoly& derivative, const Rational& lo, const Rational& hi, int max_depth) {
  if (lo > hi) throw std::invalid_argument("empty interval in monotonicity check");
  return nonpositive_on(derivative, lo, hi, max_depth);
}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("piecewise function needs at least one piece");
  if (breakpoints_.size() != pieces_.size() + 1) {
    throw std::invalid_argument("piecewise function needs exactly one more breakpoint than pieces");
  }
  if (!breakpoints_.front().is_zero()) throw std::invalid_argument("volume function domain must start at 0");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  if (total().sign() <= 0) {
    throw std::invalid_argument("volume function must be positive at 0 (trivial valuation)");
  }
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Rational& x = breakpoints_[i + 1];
    if (pieces_[i].eval(x) != pieces_[i + 1].eval(x)) {
      throw std::invalid_argument("volume function is discontinuous at x = " + x.to_string());
    }
  }
  if (!pieces_.back().eval(breakpoints_.back()).is_zero()) {
    throw std::invalid_argument("volume function must vanish at its last breakpoint");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!derivative_nonpositive(pieces_[i].derivative(), breakpoints_[i], breakpoints_[i + 1])) {
      throw std::invalid_argument("volume function is not non-increasing on piece " + std::to_string(i));
    }
  }
}

PiecewisePoly PiecewisePoly::single(UniPoly piece, const Rational& end) {
  return PiecewisePoly({Rational(0), end}, {std::move(piece)});
}

Rational PiecewisePoly::eval(const Rational& x) const {
  if (x.sign() < 0) throw std::invalid_argument("volume function evaluated at negative x");
  if (x >= support_end()) return Rational(0);
  // first breakpoint strictly greater than x closes the piece containing x
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto index = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[index].eval(x);
}

Rational PiecewisePoly::integrate(const Rational& lo, const Rational& hi) const {
  if (lo.sign() < 0 || hi > support_end() || lo > hi) {
    throw std::invalid_argument("integration bounds [" + lo.to_string() + ", " + hi.to_string() +
                                "] outside [0, " + support_end().to_string() + "]");
  }
  Rational sum;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rational a = std::max(lo, breakpoints_[i]);
    const Rational b = std::min(hi, breakpoints_[i + 1]);
    if (a < b) sum += pieces_[i].integrate(a, b);
  }
  return sum;
}

PiecewisePoly piecewise_scale(const PiecewisePoly& f, const Rational& c, int n) {
  if (c.sign() <= 0) throw std::invalid_argument("polarization scale must be positive");
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<Rational> breaks;
  breaks.reserve(f.breakpoints().size());
  for (const auto& x : f.breakpoints()) breaks.push_back(x * c);
  const Rational factor = c.pow(n);
  std::vector<UniPoly> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back(p.rescale_argument(c) * factor);
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

}  // namespace adjstab
