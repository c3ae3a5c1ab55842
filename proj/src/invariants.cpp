#include "adjstab/invariants.hpp"

#include <optional>
#include <stdexcept>

namespace adjstab {

void require_unit_t(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) throw std::domain_error("t = " + t.to_string() + " is outside [0, 1]");
}

MixedDiscrepancy mixed_log_discrepancy(const Rational& t, const ValuationRecord& v) {
  require_unit_t(t);
  MixedDiscrepancy out;
  out.t = t;
  out.ambient_part = (Rational(1) - t) * v.ambient_log_discrepancy();
  out.foliated_part = t * v.foliated_log_discrepancy();
  out.value = out.ambient_part + out.foliated_part;
  return out;
}

Rational mixed_discrepancy_with_divisor(const Rational& t, const ValuationRecord& v, const Rational& order) {
  if (order.sign() < 0) throw std::invalid_argument("divisor order must be non-negative");
  return mixed_log_discrepancy(t, v).value - order;
}

Rational pseudoeffective_threshold(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  return volume_function(model, v, t).support_end();
}

Rational s_invariant(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  const PiecewisePoly f = volume_function(model, v, t);
  const Rational total = f.total();
  if (total.sign() <= 0) throw std::domain_error("zero total volume for '" + v.label + "'");
  return f.integrate(Rational(0), f.support_end()) / total;
}

Rational j_invariant(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  return pseudoeffective_threshold(model, v, t) - s_invariant(model, v, t);
}

BetaReport beta(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  model.require_ample(t);
  const PiecewisePoly f = volume_function(model, v, t);
  BetaReport r;
  r.valuation_label = v.label;
  r.t = t;
  r.A = mixed_log_discrepancy(t, v).value;
  r.T = f.support_end();
  r.S = f.integrate(Rational(0), r.T) / f.total();
  r.j = r.T - r.S;
  r.beta = r.A - r.S;
  return r;
}

Rational lct_over_candidates(const Rational& t, const DivisorOrders& orders) {
  std::optional<Rational> best;
  for (const auto& entry : orders) {
    if (entry.order.sign() < 0) throw std::invalid_argument("divisor order must be non-negative");
    if (entry.order.is_zero()) continue;
    Rational ratio = mixed_log_discrepancy(t, entry.valuation).value / entry.order;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  if (!best) throw std::invalid_argument("lct needs a candidate with positive order along D");
  return *best;
}

CandidateBounds alpha_delta_over_candidates(const FoliatedModel& model, std::span<const ValuationRecord> candidates,
                                            const Rational& t) {
  if (candidates.empty()) throw std::invalid_argument("alpha/delta bounds need at least one candidate");
  std::optional<CandidateBounds> out;
  for (const auto& v : candidates) {
    const BetaReport r = beta(model, v, t);
    Rational alpha = r.A / r.T;
    Rational delta = r.A / r.S;
    if (!out) {
      out = CandidateBounds{std::move(alpha), std::move(delta), v.label, v.label};
      continue;
    }
    if (alpha < out->alpha_ub || (alpha == out->alpha_ub && v.label < out->alpha_label)) {
      out->alpha_ub = std::move(alpha);
      out->alpha_label = v.label;
    }
    if (delta < out->delta_ub || (delta == out->delta_ub && v.label < out->delta_label)) {
      out->delta_ub = std::move(delta);
      out->delta_label = v.label;
    }
  }
  return *out;
}

Rational normalized_volume(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  if (!v.valuation_volume) throw std::invalid_argument("valuation '" + v.label + "' has no volume");
  return mixed_log_discrepancy(t, v).value.pow(model.dimension()) * *v.valuation_volume;
}

}  // namespace adjstab
