#include "adjstab/testconfig.hpp"

#include <optional>
#include <stdexcept>

#include "adjstab/invariants.hpp"

namespace adjstab {

void TestConfigData::validate() const {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (V.sign() <= 0) throw std::invalid_argument("volume V must be positive");
}

Rational df(const TestConfigData& data) {
  data.validate();
  const Rational n(data.n);
  return (n / (n + Rational(1)) * data.mu * data.Lbar_pow + data.K_dot_L) / data.V;
}

Rational df_anti_adjoint(int n, const Rational& V, const Rational& Lbar_pow) {
  if (V.sign() <= 0) throw std::invalid_argument("volume V must be positive");
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  return -Lbar_pow / (Rational(n + 1) * V);
}

DfFromBeta df_from_beta(const FoliatedModel& model, const ValuationRecord& v, const Rational& t) {
  const BetaReport r = beta(model, v, t);
  const int n = model.dimension();
  const Rational V = model.volume(t);
  DfFromBeta out{r.beta, -Rational(n + 1) * V * r.beta, Rational(0)};
  out.df = df_anti_adjoint(n, V, out.Lbar_pow);
  if (out.df != out.beta) {
    throw std::logic_error("DF of the Rees configuration of '" + v.label + "' differs from beta");
  }
  return out;
}

Rational jna(const TestConfigData& data) {
  data.validate();
  if (!data.L_mu_pullback) throw std::invalid_argument("J^NA needs the intersection Lbar . (mu^* L)^n");
  const Rational j = (*data.L_mu_pullback - data.Lbar_pow / Rational(data.n + 1)) / data.V;
  if (j.sign() < 0) throw std::domain_error("inconsistent intersection data: J^NA = " + j.to_string() + " < 0");
  return j;
}

Rational ding(const TestConfigData& data) {
  data.validate();
  if (!data.lct_along_fibre) throw std::invalid_argument("Ding needs the mixed lct along the central fibre");
  return -data.Lbar_pow / (Rational(data.n + 1) * data.V) - (Rational(1) - data.t) + *data.lct_along_fibre;
}

Rational fibre_lct(const Rational& t, std::span<const FibreComponent> components) {
  require_unit_t(t);
  if (components.empty()) throw std::invalid_argument("central fibre has no components");
  const Rational vertical_discrepancy = Rational(1) - t;
  std::optional<Rational> best;
  for (const auto& c : components) {
    if (c.multiplicity.sign() <= 0) throw std::invalid_argument("fibre multiplicity must be positive");
    if (c.boundary_coefficient.sign() < 0) throw std::invalid_argument("boundary coefficient must be non-negative");
    Rational ratio = (vertical_discrepancy - c.boundary_coefficient) / c.multiplicity;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return *best;
}

}  // namespace adjstab
