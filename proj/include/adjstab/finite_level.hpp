#pragma once

// Finite-level expected vanishing orders S_m and delta_m on Pn-type models.
//
// Sections of O(D) on Pn are spanned by degree-D monomials in x_0..x_n, and
// the monomial basis is adapted to both templates:
//   hyperplane {x_0 = 0}:   order = exponent of x_0
//   point [1:0:...:0]:      order = total degree in x_1..x_n
// Multiplicities are counted by stars and bars.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "adjstab/model.hpp"
#include "adjstab/rational.hpp"

namespace adjstab {

enum class MonomialTemplate { kHyperplane, kPoint };

struct OrderHistogram {
  int m = 1;
  /// (order, multiplicity), orders strictly increasing, multiplicities > 0.
  std::vector<std::pair<std::int64_t, std::uint64_t>> counts;
  std::uint64_t section_count = 0;  // N_m
};

/// h^0(Pn, O(degree)) = binomial(degree + n, n).
std::uint64_t section_count(int n, std::int64_t degree);

/// Histogram of vanishing orders of degree-`degree` monomials on Pn,
/// recorded as level m.
OrderHistogram order_histogram(int n, std::int64_t degree, MonomialTemplate tmpl, int m = 1);

/// Level-m histogram for L = c H; c * m must be an integer.
OrderHistogram level_histogram(int n, const Rational& hyperplane_coefficient, int m, MonomialTemplate tmpl);

/// S_m = sum(order * multiplicity) / (m N_m).
Rational s_m(const OrderHistogram& hist);

struct LevelCandidate {
  ValuationRecord valuation;
  MonomialTemplate tmpl;
};

/// min over candidates of A^[t] / S_m at L_t.
Rational delta_m(const FoliatedModel& model, std::span<const LevelCandidate> candidates, const Rational& t, int m);

struct ConvergenceRow {
  int m;
  Rational s_m;
  Rational s;
  Rational gap;  // |S_m - S|
};

/// S_m against the integral S for L = c H on Pn, where S comes from the
/// template's volume function: (c - x)^n for the hyperplane, c^n - x^n for
/// the point.
std::vector<ConvergenceRow> convergence_report(int n, const Rational& hyperplane_coefficient, MonomialTemplate tmpl,
                                               std::span<const int> m_list);

}  // namespace adjstab
