#include "adjstab/finite_level.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "adjstab/invariants.hpp"
#include "adjstab/piecewise.hpp"

namespace adjstab {

namespace {

std::uint64_t binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < bottom) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  if (!out.fits_ulong_p()) throw std::overflow_error("section count exceeds 64 bits");
  return out.get_ui();
}

}  // namespace

std::uint64_t section_count(int n, std::int64_t degree) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (degree < 0) throw std::invalid_argument("negative degree");
  return binomial(degree + n, n);
}

OrderHistogram order_histogram(int n, std::int64_t degree, MonomialTemplate tmpl, int m) {
  if (m < 1) throw std::invalid_argument("level m must be positive");
  OrderHistogram hist;
  hist.m = m;
  hist.section_count = section_count(n, degree);
  hist.counts.reserve(static_cast<std::size_t>(degree) + 1);
  for (std::int64_t k = 0; k <= degree; ++k) {
    // monomials in the n complementary variables of degree (degree - k) for
    // the hyperplane, of degree k for the point
    const std::int64_t rest = tmpl == MonomialTemplate::kHyperplane ? degree - k : k;
    const std::uint64_t mult = binomial(rest + n - 1, n - 1);
    if (mult > 0) hist.counts.emplace_back(k, mult);
  }
  return hist;
}

OrderHistogram level_histogram(int n, const Rational& hyperplane_coefficient, int m, MonomialTemplate tmpl) {
  if (m < 1) throw std::invalid_argument("level m must be positive");
  if (hyperplane_coefficient.sign() <= 0) throw std::invalid_argument("polarization must be a positive multiple of H");
  const Rational degree = hyperplane_coefficient * Rational(m);
  if (!degree.is_integer()) {
    throw std::invalid_argument("m = " + std::to_string(m) + " does not clear the denominator of L = " +
                                hyperplane_coefficient.to_string() + " H");
  }
  const mpz_class& d = degree.numerator();
  if (!d.fits_slong_p()) throw std::overflow_error("degree too large");
  return order_histogram(n, d.get_si(), tmpl, m);
}

Rational s_m(const OrderHistogram& hist) {
  if (hist.section_count == 0) throw std::invalid_argument("histogram with no sections");
  mpz_class weighted = 0;
  for (const auto& [order, mult] : hist.counts) weighted += mpz_class(static_cast<long>(order)) * mpz_class(mult);
  return Rational(mpq_class(weighted, mpz_class(static_cast<unsigned long>(hist.m)) * mpz_class(hist.section_count)));
}

Rational delta_m(const FoliatedModel& model, std::span<const LevelCandidate> candidates, const Rational& t, int m) {
  if (candidates.empty()) throw std::invalid_argument("delta_m needs at least one candidate");
  model.require_ample(t);
  const Rational c = model.hyperplane_coefficient(t);
  std::optional<Rational> best;
  for (const auto& cand : candidates) {
    const Rational s = s_m(level_histogram(model.dimension(), c, m, cand.tmpl));
    if (s.is_zero()) throw std::domain_error("S_m vanishes for '" + cand.valuation.label + "' (trivial valuation)");
    Rational ratio = mixed_log_discrepancy(t, cand.valuation).value / s;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return *best;
}

std::vector<ConvergenceRow> convergence_report(int n, const Rational& hyperplane_coefficient, MonomialTemplate tmpl,
                                               std::span<const int> m_list) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  const Rational& c = hyperplane_coefficient;
  if (c.sign() <= 0) throw std::invalid_argument("polarization must be a positive multiple of H");
  UniPoly piece;
  if (tmpl == MonomialTemplate::kHyperplane) {
    piece = UniPoly::affine_power(c, Rational(-1), n);
  } else {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs.front() = c.pow(n);
    coeffs.back() = Rational(-1);
    piece = UniPoly(std::move(coeffs));
  }
  const PiecewisePoly vol = PiecewisePoly::single(std::move(piece), c);
  const Rational s = vol.integrate(Rational(0), c) / vol.total();

  std::vector<ConvergenceRow> rows;
  rows.reserve(m_list.size());
  for (int m : m_list) {
    Rational sm = s_m(level_histogram(n, c, m, tmpl));
    Rational gap = abs(sm - s);
    rows.push_back({m, std::move(sm), s, std::move(gap)});
  }
  return rows;
}

}  // namespace adjstab
