#pragma once

// Valuative invariants of an adjoint foliated structure at a fixed t.
//
// Infimum-type invariants (lct, alpha, delta) are taken over a finite
// candidate set and are therefore upper bounds of the true invariants.

#include <span>
#include <string>
#include <vector>

#include "adjstab/model.hpp"
#include "adjstab/rational.hpp"

namespace adjstab {

/// A^[t](E) = (1 - t)(a(E,X) + 1) + t(a(E,F) + epsilon(E)).
struct MixedDiscrepancy {
  Rational value;
  Rational t;
  Rational ambient_part;   // (1 - t)(a_X + 1)
  Rational foliated_part;  // t(a_F + epsilon)
};

struct BetaReport {
  std::string valuation_label;
  Rational t;
  Rational A;
  Rational S;
  Rational T;
  Rational j;
  Rational beta;
};

/// Throws std::domain_error unless 0 <= t <= 1.
void require_unit_t(const Rational& t);

MixedDiscrepancy mixed_log_discrepancy(const Rational& t, const ValuationRecord& v);

/// A^[t]_{X,F;D}(E) = A^[t]_{X,F}(E) - ord_E(D).
Rational mixed_discrepancy_with_divisor(const Rational& t, const ValuationRecord& v, const Rational& order);

/// T_{L_t}(E) = sup{x : vol(L_t - xE) > 0}.
Rational pseudoeffective_threshold(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

/// S_{L_t}(E) = (1 / vol(L_t)) * integral_0^T vol(L_t - xE) dx.
Rational s_invariant(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

/// j = T - S.
Rational j_invariant(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

/// beta^[t] = A^[t] - S_{L_t}.  Throws std::domain_error if L_t is not ample.
BetaReport beta(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

/// min over entries with positive order of A^[t] / order.
Rational lct_over_candidates(const Rational& t, const DivisorOrders& orders);

struct CandidateBounds {
  Rational alpha_ub;  // min A / T
  Rational delta_ub;  // min A / S
  std::string alpha_label;
  std::string delta_label;
};

CandidateBounds alpha_delta_over_candidates(const FoliatedModel& model, std::span<const ValuationRecord> candidates,
                                            const Rational& t);

/// A^[t](v)^n * vol(v).
Rational normalized_volume(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

}  // namespace adjstab
