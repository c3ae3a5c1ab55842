#pragma once

// Donaldson-Futaki, Ding and non-Archimedean J functionals evaluated from
// the intersection numbers of a compactified test configuration.  The
// intersection numbers are inputs; nothing here builds a degeneration.

#include <optional>
#include <span>
#include <string>

#include "adjstab/model.hpp"
#include "adjstab/rational.hpp"

namespace adjstab {

struct TestConfigData {
  int n = 1;
  Rational V;                                // L^n
  Rational mu;                               // mu(X, F, L)
  Rational Lbar_pow;                         // Lbar^{n+1}
  Rational K_dot_L;                          // K^[t]_{Xbar/P1} . Lbar^n
  std::optional<Rational> L_mu_pullback;     // Lbar . (mu^* L)^n
  std::optional<Rational> lct_along_fibre;   // lct^[t](Xbar, Fbar; D^[t]; Xbar_0)
  Rational t;

  void validate() const;
};

/// DF^[t] = (1/V) (n/(n+1) mu Lbar^{n+1} + K^[t] . Lbar^n).
Rational df(const TestConfigData& data);

/// DF^[t] = -Lbar^{n+1} / ((n+1) V) when Lbar ~ -K^[t] over P1 (mu = 1).
Rational df_anti_adjoint(int n, const Rational& V, const Rational& Lbar_pow);

struct DfFromBeta {
  Rational beta;
  Rational Lbar_pow;  // -(n+1) V beta
  Rational df;        // df_anti_adjoint on the synthetic data; equals beta
};

/// Rees configuration of a dreamy divisorial valuation: DF equals beta^[t].
/// Throws std::logic_error if the round trip is not exact.
DfFromBeta df_from_beta(const FoliatedModel& model, const ValuationRecord& v, const Rational& t);

/// J^NA = (1/V) (Lbar . (mu^* L)^n - Lbar^{n+1} / (n+1)); negative values
/// are rejected as inconsistent intersection data.
Rational jna(const TestConfigData& data);

/// Ding^[t] = -Lbar^{n+1} / ((n+1) V) - (1 - t) + lct^[t].
Rational ding(const TestConfigData& data);

/// An irreducible component of the central fibre: its multiplicity in
/// Xbar_0 and its coefficient in the correction divisor D^[t].
struct FibreComponent {
  std::string label;
  Rational multiplicity;
  Rational boundary_coefficient;
};

/// lct^[t] along the central fibre over its components, which are vertical
/// and hence invariant with A^[t] = 1 - t:
///   min_i ((1 - t) - b_i) / m_i.
Rational fibre_lct(const Rational& t, std::span<const FibreComponent> components);

}  // namespace adjstab
