#pragma once

// Numerical data of a polarized adjoint foliated structure (X, F, t) and of
// the divisorial valuations tested against it.
//
// Nothing here is computed from geometry: discrepancies, transversality and
// reference volume functions are inputs.  The Pn-type constructors encode
// the closed forms vol(cH - xD) = deg * (c - e x)^n for D ~ eH and
// vol(cH - xE) = c^n - x^n for the blow-up of a smooth point.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adjstab/interval.hpp"
#include "adjstab/piecewise.hpp"
#include "adjstab/rational.hpp"

namespace adjstab {

/// K_F ~_Q q K_X with X Fano.  The reference polarization is -K_X.
struct Proportional {
  Rational q;
};

/// Slope mu(X, F, L) supplied directly as an affine function of t.
struct ExplicitSlope {
  Rational intercept;
  Rational slope;
};

using CanonicalRelation = std::variant<Proportional, ExplicitSlope>;

enum class PolarizationRule {
  kFixed,        // L_t = L_ref for every t
  kAntiAdjoint,  // L_t = -K^[t] = lambda_t (-K_X); Proportional only
};

/// -K_X = d_X H, -K_F = d_F H, and H^n = hyperplane_degree.
struct ProjectiveData {
  Rational d_X;
  Rational d_F;
  Rational hyperplane_degree;
};

class FoliatedModel {
 public:
  FoliatedModel(std::string label, int n, Rational reference_volume, CanonicalRelation relation,
                PolarizationRule rule, std::optional<ProjectiveData> projective = std::nullopt,
                std::optional<TInterval> declared_range = std::nullopt);

  const std::string& label() const { return label_; }
  int dimension() const { return n_; }
  /// V_ref = L_ref^n.
  const Rational& reference_volume() const { return reference_volume_; }
  const CanonicalRelation& relation() const { return relation_; }
  PolarizationRule polarization_rule() const { return rule_; }
  const std::optional<ProjectiveData>& projective() const { return projective_; }

  bool is_proportional() const { return std::holds_alternative<Proportional>(relation_); }
  /// Throws std::logic_error outside Proportional mode.
  const Rational& q() const;
  /// lambda_t = 1 + (q - 1) t.
  Rational lambda(const Rational& t) const;

  /// c with L_t = c L_ref.
  Rational polarization_scale(const Rational& t) const;
  /// V(t) = L_t^n.
  Rational volume(const Rational& t) const;
  /// mu(X, F, L_t) = -K^[t] . L_t^{n-1} / L_t^n.
  Rational slope(const Rational& t) const;
  /// Coefficient of H in L_t; Pn-type models only.
  Rational hyperplane_coefficient(const Rational& t) const;

  AmpleRange ample_range() const;
  bool is_ample(const Rational& t) const { return ample_range().admits(t); }
  /// Throws std::domain_error when the structure is not adjoint Fano at t.
  void require_ample(const Rational& t) const;

 private:
  std::string label_;
  int n_;
  Rational reference_volume_;
  CanonicalRelation relation_;
  PolarizationRule rule_;
  std::optional<ProjectiveData> projective_;
  std::optional<TInterval> declared_range_;
};

enum class VolumeScaling {
  kFixed,               // the reference volume function is used at every t
  kFollowsPolarization  // rescaled by the model's polarization scale
};

/// A divisorial valuation ord_E with its discrepancy data and the volume
/// function x -> vol(L_ref - xE).
struct ValuationRecord {
  ValuationRecord(std::string label, Rational a_X, Rational a_F, int epsilon, PiecewisePoly reference_volume_fn,
                  VolumeScaling scaling = VolumeScaling::kFollowsPolarization,
                  std::optional<Rational> valuation_volume = std::nullopt);

  std::string label;
  Rational a_X;  // a(E, X)
  Rational a_F;  // a(E, F)
  int epsilon;   // 1 transverse, 0 invariant
  PiecewisePoly reference_volume_fn;
  VolumeScaling scaling;
  std::optional<Rational> valuation_volume;
  std::string provenance;

  /// A_X(E) = a(E, X) + 1.
  Rational ambient_log_discrepancy() const { return a_X + Rational(1); }
  /// A_{X,F}(E) = a(E, F) + epsilon(E).
  Rational foliated_log_discrepancy() const { return a_F + Rational(epsilon); }
  bool invariant() const { return epsilon == 0; }
};

/// x -> vol(L_t - xE).
PiecewisePoly volume_function(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

/// The numbers v(D) for a fixed effective divisor D over a candidate set.
struct DivisorOrder {
  ValuationRecord valuation;
  Rational order;
};
using DivisorOrders = std::vector<DivisorOrder>;

/// Pn-type model with -K_X = d_X H and -K_F = d_F H, so q = d_F / d_X and
/// L_t = ((1 - t) d_X + t d_F) H under the anti-adjoint rule.
FoliatedModel make_pn_model(int n, const Rational& d_X, const Rational& d_F,
                            const Rational& hyperplane_degree = Rational(1),
                            PolarizationRule rule = PolarizationRule::kAntiAdjoint, std::string label = "");

/// Prime divisor D ~ class_multiple * H on a Pn-type model.
ValuationRecord hyperplane_valuation(const FoliatedModel& model, std::string label, bool invariant,
                                     const Rational& a_X, const Rational& a_F,
                                     const Rational& class_multiple = Rational(1));

/// Exceptional divisor of the blow-up of a smooth point:
/// vol(L_ref - xE) = V_ref - x^n on [0, V_ref^{1/n}].  When the root is
/// irrational a threshold must be supplied; the template then becomes
/// V_ref (1 - (x / threshold)^n).
ValuationRecord point_blowup_valuation(const FoliatedModel& model, std::string label, const Rational& a_X,
                                       const Rational& a_F, int epsilon,
                                       const std::optional<Rational>& threshold_override = std::nullopt);

}  // namespace adjstab
