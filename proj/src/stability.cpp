#include "adjstab/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "adjstab/invariants.hpp"

namespace adjstab {

std::string AffineInT::to_string() const {
  if (slope.is_zero()) return intercept.to_string();
  std::string out = intercept.is_zero() ? "" : intercept.to_string();
  if (out.empty()) {
    out = (slope.sign() < 0 ? "-" : "") + abs(slope).to_string() + "*t";
  } else {
    out += (slope.sign() < 0 ? " - " : " + ") + abs(slope).to_string() + "*t";
  }
  return out;
}

AffineInT beta_affine_form(const FoliatedModel& model, const ValuationRecord& v) {
  if (!model.is_proportional() || model.polarization_rule() != PolarizationRule::kAntiAdjoint) {
    throw std::invalid_argument("affine beta form needs a proportional model with L_t = -K^[t]");
  }
  if (v.scaling != VolumeScaling::kFollowsPolarization) {
    throw std::invalid_argument("valuation '" + v.label + "' does not follow the polarization");
  }
  const PiecewisePoly& f = v.reference_volume_fn;
  const Rational s0 = f.integrate(Rational(0), f.support_end()) / f.total();
  const Rational a_x = v.ambient_log_discrepancy();
  const Rational a_xf = v.foliated_log_discrepancy();
  const Rational& q = model.q();
  return {a_x - s0, (q - Rational(1)) * (a_x - s0) + a_xf - q * a_x};
}

TInterval admissible_interval(const AffineInT& f, const TInterval& ample_range) {
  if (ample_range.empty()) throw std::invalid_argument("ample range is empty");
  if (f.slope.is_zero()) return f.intercept.sign() >= 0 ? ample_range : TInterval();
  const Rational root = -f.intercept / f.slope;
  if (f.slope.sign() > 0) {
    // f >= 0 iff t >= root
    if (root > ample_range.hi()) return {};
    return TInterval(std::max(root, ample_range.lo()), ample_range.hi());
  }
  if (root < ample_range.lo()) return {};
  return TInterval(ample_range.lo(), std::min(root, ample_range.hi()));
}

SemistableInterval semistable_interval(const FoliatedModel& model, std::span<const ValuationRecord> candidates) {
  if (candidates.empty()) throw std::invalid_argument("semistable interval needs at least one candidate");
  const AmpleRange range = model.ample_range();
  TInterval acc = range.closed;
  for (const auto& v : candidates) acc = acc.intersect(admissible_interval(beta_affine_form(model, v), range.closed));
  return {acc, range.wall};
}

std::string DestabilizerVerdict::to_string() const {
  if (destabilized) return "destabilized by " + label + " with beta = " + beta.to_string();
  return "no destabilizer among " + std::to_string(candidate_count) + " candidates; delta_ub = " +
         delta_ub.to_string();
}

DestabilizerVerdict destabilizer_search(const FoliatedModel& model, std::span<const ValuationRecord> candidates,
                                        const Rational& t) {
  if (candidates.empty()) throw std::invalid_argument("destabilizer search needs at least one candidate");
  model.require_ample(t);
  DestabilizerVerdict out;
  out.candidate_count = candidates.size();
  bool first = true;
  for (const auto& v : candidates) {
    const BetaReport r = beta(model, v, t);
    const Rational delta = r.A / r.S;
    if (first || r.beta < out.beta || (r.beta == out.beta && v.label < out.label)) {
      out.beta = r.beta;
      out.label = v.label;
    }
    if (first || delta < out.delta_ub) out.delta_ub = delta;
    first = false;
  }
  out.destabilized = out.beta.sign() < 0;
  if (!out.destabilized) out.label.clear();
  return out;
}

AlphaVerdict sufficient_alpha_verdict(int n, const Rational& alpha_lower_bound) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  const Rational threshold(n, n + 1);
  if (alpha_lower_bound > threshold) return AlphaVerdict::kUniformlyStable;
  if (alpha_lower_bound == threshold) return AlphaVerdict::kSemistable;
  return AlphaVerdict::kInconclusive;
}

std::string to_string(AlphaVerdict verdict) {
  switch (verdict) {
    case AlphaVerdict::kUniformlyStable:
      return "uniformly stable (sufficient criterion)";
    case AlphaVerdict::kSemistable:
      return "semistable (sufficient criterion)";
    case AlphaVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

void validate(const WeightedBlowup& w, const Rational& t) {
  if (w.d < 1 || w.r < 1 || w.r > w.d) throw std::invalid_argument("weighted blow-up needs 1 <= r <= d");
  // an invariant divisor leaves room for at most d - 1 foliation directions
  if (w.kind == DivisorKind::kInvariant && w.r > w.d - 1) {
    throw std::invalid_argument("an invariant divisor needs r <= d - 1");
  }
  if (w.k.sign() <= 0 || w.b.sign() <= 0) throw std::invalid_argument("weighted blow-up needs k > 0 and b > 0");
  require_unit_t(t);
}

}  // namespace

Rational weighted_blowup_discrepancy(const WeightedBlowup& w, const Rational& t) {
  validate(w, t);
  const Rational one(1);
  const Rational ambient = w.k / w.b + Rational(w.d - 1) * w.k;
  const Rational foliated =
      w.kind == DivisorKind::kInvariant ? Rational(w.r) * w.k : w.k / w.b + Rational(w.r - 1) * w.k;
  return (one - t) * ambient + t * foliated;
}

PullbackBound weighted_blowup_pullback(const WeightedBlowup& w, const Rational& t, const Rational& a) {
  validate(w, t);
  if (a.sign() < 0) throw std::invalid_argument("mixed discrepancy a must be non-negative");
  if (a > w.b) throw std::invalid_argument("weighted blow-up needs b >= a");
  const Rational one(1);
  // A(F) over Y plus (a - ((1 - t) + t eps(E))) ord_F(E), with ord_F(E) = k / b
  const Rational eps = w.kind == DivisorKind::kInvariant ? Rational(0) : Rational(1);
  const Rational value = weighted_blowup_discrepancy(w, t) + (a - ((one - t) + t * eps)) * (w.k / w.b);
  return {value, value <= w.k * Rational(w.d)};
}

Rational epsilon_lc_certificate(int d, const Rational& volume, const Rational& delta, const Rational& t) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (volume.sign() <= 0) throw std::invalid_argument("volume bound must be positive");
  if (delta.sign() <= 0) throw std::invalid_argument("alpha lower bound must be positive");
  if (t.sign() <= 0 || t >= Rational(1)) throw std::domain_error("certificate needs 0 < t < 1");
  const Rational eps0 = std::min(delta.pow(d) * volume / Rational(d).pow(d), Rational(1));
  return std::min({eps0, t, Rational(1) - t});
}

Rational semistable_alpha_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  return Rational(1, n + 1);
}

}  // namespace adjstab
