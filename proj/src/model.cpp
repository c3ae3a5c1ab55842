#include "adjstab/model.hpp"

#include <stdexcept>

namespace adjstab {

FoliatedModel::FoliatedModel(std::string label, int n, Rational reference_volume, CanonicalRelation relation,
                             PolarizationRule rule, std::optional<ProjectiveData> projective,
                             std::optional<TInterval> declared_range)
    : label_(std::move(label)),
      n_(n),
      reference_volume_(std::move(reference_volume)),
      relation_(std::move(relation)),
      rule_(rule),
      projective_(std::move(projective)),
      declared_range_(std::move(declared_range)) {
  if (n_ < 1) throw std::invalid_argument("dimension must be at least 1");
  if (reference_volume_.sign() <= 0) throw std::invalid_argument("volume must be positive");
  if (rule_ == PolarizationRule::kAntiAdjoint && !is_proportional()) {
    throw std::invalid_argument("anti-adjoint polarization needs a proportional canonical relation");
  }
  if (declared_range_ && declared_range_->empty()) throw std::invalid_argument("declared t-range is empty");
}

const Rational& FoliatedModel::q() const {
  if (const auto* p = std::get_if<Proportional>(&relation_)) return p->q;
  throw std::logic_error("model '" + label_ + "' has no proportionality constant");
}

Rational FoliatedModel::lambda(const Rational& t) const { return Rational(1) + (q() - Rational(1)) * t; }

Rational FoliatedModel::polarization_scale(const Rational& t) const {
  return rule_ == PolarizationRule::kAntiAdjoint ? lambda(t) : Rational(1);
}

Rational FoliatedModel::volume(const Rational& t) const {
  require_ample(t);
  return polarization_scale(t).pow(n_) * reference_volume_;
}

Rational FoliatedModel::slope(const Rational& t) const {
  require_ample(t);
  if (const auto* e = std::get_if<ExplicitSlope>(&relation_)) return e->intercept + e->slope * t;
  // -K^[t] = lambda_t L_ref and L_t = c L_ref give mu = lambda_t / c.
  return lambda(t) / polarization_scale(t);
}

Rational FoliatedModel::hyperplane_coefficient(const Rational& t) const {
  if (!projective_) throw std::logic_error("model '" + label_ + "' is not a Pn-type model");
  return polarization_scale(t) * projective_->d_X;
}

AmpleRange FoliatedModel::ample_range() const {
  if (!is_proportional()) return {declared_range_.value_or(TInterval::unit()), std::nullopt};
  // lambda_t > 0 on [0, 1] unless lambda_1 = q <= 0; the wall is then 1 / (1 - q).
  const Rational& qq = q();
  if (qq.sign() > 0) return {TInterval::unit(), std::nullopt};
  const Rational wall = Rational(1) / (Rational(1) - qq);
  return {TInterval(Rational(0), closure_below(wall)), wall};
}

void FoliatedModel::require_ample(const Rational& t) const {
  if (t.sign() < 0 || t > Rational(1)) {
    throw std::domain_error("t = " + t.to_string() + " is outside [0, 1]");
  }
  if (!is_ample(t)) {
    throw std::domain_error("not adjoint Fano at t = " + t.to_string() + " for model '" + label_ + "'");
  }
}

ValuationRecord::ValuationRecord(std::string label_in, Rational a_X_in, Rational a_F_in, int epsilon_in,
                                 PiecewisePoly reference_volume_fn_in, VolumeScaling scaling_in,
                                 std::optional<Rational> valuation_volume_in)
    : label(std::move(label_in)),
      a_X(std::move(a_X_in)),
      a_F(std::move(a_F_in)),
      epsilon(epsilon_in),
      reference_volume_fn(std::move(reference_volume_fn_in)),
      scaling(scaling_in),
      valuation_volume(std::move(valuation_volume_in)) {
  if (epsilon != 0 && epsilon != 1) throw std::invalid_argument("epsilon must be 0 or 1");
  if (valuation_volume && valuation_volume->sign() < 0) {
    throw std::invalid_argument("valuation volume must be non-negative");
  }
}

PiecewisePoly volume_function(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  model.require_ample(t);
  if (v.scaling == VolumeScaling::kFixed) return v.reference_volume_fn;
  const Rational c = model.polarization_scale(t);
  if (c == Rational(1)) return v.reference_volume_fn;
  return piecewise_scale(v.reference_volume_fn, c, model.dimension());
}

FoliatedModel make_pn_model(int n, const Rational& d_X, const Rational& d_F, const Rational& hyperplane_degree,
                            PolarizationRule rule, std::string label) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (d_X.sign() <= 0) throw std::invalid_argument("-K_X must be a positive multiple of H");
  if (hyperplane_degree.sign() <= 0) throw std::invalid_argument("hyperplane degree must be positive");
  if (label.empty()) label = "P" + std::to_string(n);
  return FoliatedModel(std::move(label), n, hyperplane_degree * d_X.pow(n), Proportional{d_F / d_X}, rule,
                       ProjectiveData{d_X, d_F, hyperplane_degree});
}

ValuationRecord hyperplane_valuation(const FoliatedModel& model, std::string label, bool invariant,
                                     const Rational& a_X, const Rational& a_F, const Rational& class_multiple) {
  if (!model.projective()) throw std::invalid_argument("hyperplane template needs a Pn-type model");
  if (class_multiple.sign() <= 0) throw std::invalid_argument("divisor class multiple must be positive");
  const ProjectiveData& pd = *model.projective();
  // vol(d_X H - x e H) = deg (d_X - e x)^n on [0, d_X / e]
  UniPoly piece = UniPoly::affine_power(pd.d_X, -class_multiple, model.dimension()) * pd.hyperplane_degree;
  auto fn = PiecewisePoly::single(std::move(piece), pd.d_X / class_multiple);
  return ValuationRecord(std::move(label), a_X, a_F, invariant ? 0 : 1, std::move(fn));
}

ValuationRecord point_blowup_valuation(const FoliatedModel& model, std::string label, const Rational& a_X,
                                       const Rational& a_F, int epsilon,
                                       const std::optional<Rational>& threshold_override) {
  if (!model.projective()) throw std::invalid_argument("point blow-up template needs a Pn-type model");
  const int n = model.dimension();
  const Rational& volume = model.reference_volume();
  Rational threshold;
  if (threshold_override) {
    if (threshold_override->sign() <= 0) throw std::invalid_argument("threshold override must be positive");
    threshold = *threshold_override;
  } else if (auto root = volume.nth_root(static_cast<unsigned>(n))) {
    threshold = *root;
  } else {
    throw std::invalid_argument("pseudo-effective threshold " + volume.to_string() + "^(1/" + std::to_string(n) +
                                ") is irrational; supply a threshold override");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.front() = volume;
  coeffs.back() = -volume / threshold.pow(n);
  auto fn = PiecewisePoly::single(UniPoly(std::move(coeffs)), threshold);
  return ValuationRecord(std::move(label), a_X, a_F, epsilon, std::move(fn));
}

}  // namespace adjstab
