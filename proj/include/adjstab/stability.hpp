#pragma once

// Wall crossing in t, destabilizer searches and the numeric criteria that
// feed the boundedness argument (weighted blow-ups and the epsilon-lc
// threshold).

#include <optional>
#include <span>
#include <string>

#include "adjstab/interval.hpp"
#include "adjstab/model.hpp"
#include "adjstab/rational.hpp"

namespace adjstab {

/// f(t) = intercept + slope * t.
struct AffineInT {
  Rational intercept;
  Rational slope;

  Rational operator()(const Rational& t) const { return intercept + slope * t; }
  /// e.g. "2/5 - 3/5*t".
  std::string to_string() const;
};

/// beta^[t](v) as an affine function of t for a Proportional model with the
/// anti-adjoint polarization L_t = lambda_t (-K_X):
///   beta(t) = lambda_t (A_X - S_0) + t (A_{X,F} - q A_X),  S_0 = S_{-K_X}(v).
AffineInT beta_affine_form(const FoliatedModel& model, const ValuationRecord& v);

/// {t : f(t) >= 0} intersected with `ample_range`.
TInterval admissible_interval(const AffineInT& f, const TInterval& ample_range);

struct SemistableInterval {
  /// Intersection of the candidates' admissible intervals; a superset of
  /// the true semistable locus.
  TInterval interval;
  /// Open ampleness wall, when the closed interval was cut below it.
  std::optional<Rational> ample_wall;
};

SemistableInterval semistable_interval(const FoliatedModel& model, std::span<const ValuationRecord> candidates);

struct DestabilizerVerdict {
  bool destabilized = false;
  std::string label;  // the destabilizing candidate, if any
  Rational beta;      // its beta (the most negative one)
  std::size_t candidate_count = 0;
  Rational delta_ub;  // min A / S over the candidates

  std::string to_string() const;
};

/// Most negative beta wins, ties broken by label.  Only refutes: a clean
/// result means no candidate destabilizes, never that the structure is
/// semistable.
DestabilizerVerdict destabilizer_search(const FoliatedModel& model, std::span<const ValuationRecord> candidates,
                                        const Rational& t);

enum class AlphaVerdict { kInconclusive, kSemistable, kUniformlyStable };

/// Sufficient criterion alpha >= n / (n + 1), for a certified lower bound
/// of alpha^[t]; strict inequality gives uniform stability.
AlphaVerdict sufficient_alpha_verdict(int n, const Rational& alpha_lower_bound);
std::string to_string(AlphaVerdict verdict);

enum class DivisorKind { kInvariant, kTransverse };

/// Weighted blow-up of a very general point of a smooth prime divisor E on
/// a smooth d-fold with a smooth rank-r foliation, weights (k/b, k, ..., k).
struct WeightedBlowup {
  int d;
  int r;
  Rational k;
  Rational b;
  DivisorKind kind;
};

/// A^[t] of the exceptional divisor over the smooth model.
Rational weighted_blowup_discrepancy(const WeightedBlowup& w, const Rational& t);

struct PullbackBound {
  Rational value;
  bool bound_ok;  // value <= k d
};

/// A^[t] over X of the exceptional divisor, when E has A^[t](E) = a <= b.
PullbackBound weighted_blowup_pullback(const WeightedBlowup& w, const Rational& t, const Rational& a);

/// min(delta^d V / d^d, 1) capped further by t and 1 - t.
Rational epsilon_lc_certificate(int d, const Rational& volume, const Rational& delta, const Rational& t);

/// Lower bound 1 / (n + 1) of alpha^[t] for t-K-semistable structures.
Rational semistable_alpha_lower_bound(int n);

}  // namespace adjstab
