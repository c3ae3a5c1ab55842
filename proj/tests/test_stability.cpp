#include <gtest/gtest.h>

#include <stdexcept>

#include "adjstab/invariants.hpp"
#include "adjstab/stability.hpp"
#include "support.hpp"

using namespace adjstab;
using adjstab::testing::r;
using adjstab::testing::random_in;
using adjstab::testing::uniform_int;

namespace {

FoliatedModel radial() { return make_pn_model(2, Rational(3), Rational(1)); }
FoliatedModel cubic_fourfold() { return make_pn_model(4, Rational(3), Rational(1), Rational(3)); }
FoliatedModel cubic_pencil() { return make_pn_model(2, Rational(3), Rational(-3)); }

ValuationRecord invariant_line(const FoliatedModel& m) {
  return hyperplane_valuation(m, "invariant_line", true, Rational(0), Rational(0));
}

// pullback discrepancy written out term by term
Rational pullback_oracle(int d, int r_, const Rational& k, const Rational& b, const Rational& t, bool invariant,
                         const Rational& a) {
  const Rational one(1);
  const Rational ambient = (one - t) * (k / b + Rational(d - 1) * k);
  const Rational fol = invariant ? t * Rational(r_) * k : t * (k / b + Rational(r_ - 1) * k);
  const Rational weight = invariant ? (one - t) : one;
  return ambient + fol + (a - weight) * k / b;
}

}  // namespace

TEST(AffineForm, WorkedExamples) {
  const auto m = radial();
  auto f = beta_affine_form(m, invariant_line(m));
  EXPECT_EQ(f.intercept, Rational(0));
  EXPECT_EQ(f.slope, r("-1/3"));
  EXPECT_EQ(f.to_string(), "-1/3*t");
  const auto cf = cubic_fourfold();
  f = beta_affine_form(cf, invariant_line(cf));
  EXPECT_EQ(f.intercept, r("2/5"));
  EXPECT_EQ(f.slope, r("-3/5"));
  EXPECT_EQ(f.to_string(), "2/5 - 3/5*t");
  // q = 1 with A_F = A_X
  const auto flat = make_pn_model(2, Rational(3), Rational(3));
  const auto v = hyperplane_valuation(flat, "v", false, Rational(0), Rational(0));
  EXPECT_EQ(beta_affine_form(flat, v).slope, Rational(0));
  const auto pencil = cubic_pencil();
  f = beta_affine_form(pencil, hyperplane_valuation(pencil, "m", true, Rational(0), Rational(0), Rational(3)));
  EXPECT_EQ(f.intercept, r("2/3"));
  EXPECT_EQ(f.slope, r("-1/3"));
}

TEST(AffineForm, AgreesWithBeta) {
  for (const auto& m : {radial(), cubic_fourfold(), cubic_pencil()}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = hyperplane_valuation(m, "v", trial % 2 == 0, random_in(Rational(0), Rational(2)),
                                          random_in(Rational(-1), Rational(1)));
      const auto f = beta_affine_form(m, v);
      const auto range = m.ample_range().closed;
      for (int i = 0; i < 10; ++i) {
        const Rational t = random_in(range.lo(), range.hi(), 64);
        EXPECT_EQ(f(t), beta(m, v, t).beta);
      }
    }
  }
}

TEST(AffineForm, RejectsFixedPolarization) {
  const auto m = make_pn_model(2, Rational(3), Rational(1), Rational(1), PolarizationRule::kFixed);
  EXPECT_THROW(beta_affine_form(m, invariant_line(m)), std::invalid_argument);
}

TEST(Interval, AdmissibleExamples) {
  EXPECT_EQ(admissible_interval({Rational(0), r("-1/3")}, TInterval::unit()), TInterval(Rational(0), Rational(0)));
  EXPECT_EQ(admissible_interval({r("2/5"), r("-3/5")}, TInterval::unit()), TInterval(Rational(0), r("2/3")));
  EXPECT_TRUE(admissible_interval({r("-1/5"), Rational(0)}, TInterval::unit()).empty());
  EXPECT_EQ(admissible_interval({r("-1/5"), Rational(1)}, TInterval::unit()), TInterval(r("1/5"), Rational(1)));
  EXPECT_TRUE(admissible_interval({Rational(-2), Rational(1)}, TInterval::unit()).empty());
}

TEST(Interval, SemistableExamples) {
  const auto m = radial();
  const std::vector<ValuationRecord> inv{invariant_line(m)};
  EXPECT_EQ(semistable_interval(m, inv).interval, TInterval(Rational(0), Rational(0)));
  const auto pencil = cubic_pencil();
  const std::vector<ValuationRecord> member{
      hyperplane_valuation(pencil, "member", true, Rational(0), Rational(0), Rational(3))};
  const auto s = semistable_interval(pencil, member);
  EXPECT_EQ(s.interval, TInterval(Rational(0), closure_below(r("1/2"))));
  ASSERT_TRUE(s.ample_wall.has_value());
  EXPECT_EQ(*s.ample_wall, r("1/2"));
  EXPECT_THROW(semistable_interval(m, std::vector<ValuationRecord>{}), std::invalid_argument);
}

TEST(Interval, AntiMonotoneInCandidates) {
  const auto m = radial();
  std::vector<ValuationRecord> pool;
  for (int i = 0; i < 10; ++i) {
    pool.push_back(hyperplane_valuation(m, "c" + std::to_string(i), i % 3 == 0, random_in(Rational(0), Rational(2)),
                                        random_in(Rational(-1), Rational(1))));
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ValuationRecord> subset{pool[static_cast<std::size_t>(uniform_int(0, 9))]};
    for (const auto& v : pool) {
      if (uniform_int(0, 1)) subset.push_back(v);
    }
    const TInterval before = semistable_interval(m, subset).interval;
    subset.push_back(pool[static_cast<std::size_t>(uniform_int(0, 9))]);
    const TInterval after = semistable_interval(m, subset).interval;
    EXPECT_EQ(after.intersect(before), after);
  }
}

TEST(Destabilizer, WorkedExamples) {
  const auto m = radial();
  const std::vector<ValuationRecord> inv{invariant_line(m)};
  auto v = destabilizer_search(m, inv, r("1/3"));
  EXPECT_TRUE(v.destabilized);
  EXPECT_EQ(v.label, "invariant_line");
  EXPECT_EQ(v.beta, r("-1/9"));
  EXPECT_EQ(v.to_string(), "destabilized by invariant_line with beta = -1/9");
  const auto cf = cubic_fourfold();
  const std::vector<ValuationRecord> member{hyperplane_valuation(cf, "pencil_member", true, Rational(0), Rational(0))};
  v = destabilizer_search(cf, member, r("3/4"));
  EXPECT_TRUE(v.destabilized);
  EXPECT_EQ(v.beta, r("-1/20"));
  v = destabilizer_search(cf, member, r("1/2"));
  EXPECT_FALSE(v.destabilized);
  EXPECT_EQ(v.beta, r("1/10"));
  EXPECT_EQ(v.to_string(), "no destabilizer among 1 candidates; delta_ub = 5/4");
}

TEST(Destabilizer, InvariantDivisorsDestabilizeNearOne) {
  for (int n = 1; n <= 4; ++n) {
    const auto m = make_pn_model(n, Rational(n + 1), Rational(1));
    const std::vector<ValuationRecord> c{hyperplane_valuation(m, "h", true, Rational(0), Rational(0))};
    // S_{L_t} >= eta = S at t = 1; beta(t) < 0 once 1 - t < eta
    const Rational eta = s_invariant(m, c.front(), Rational(1));
    for (int i = 0; i <= 40; ++i) {
      const Rational t = Rational(1) - eta + eta * Rational(i, 40);
      if (t.sign() <= 0 || t > Rational(1)) continue;
      if (t == Rational(1) - eta) continue;
      EXPECT_TRUE(destabilizer_search(m, c, t).destabilized) << "n=" << n << " t=" << t;
    }
  }
}

TEST(Destabilizer, NonLcFoliationIsRefuted) {
  const auto m = radial();
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a_f = random_in(Rational(-3), r("-1/48"));
    const std::vector<ValuationRecord> c{hyperplane_valuation(m, "bad", true, Rational(0), a_f)};
    EXPECT_TRUE(destabilizer_search(m, c, Rational(1)).destabilized);
    EXPECT_LT(mixed_log_discrepancy(Rational(1), c.front()).value, Rational(0));
  }
}

TEST(AlphaVerdict, Examples) {
  EXPECT_EQ(sufficient_alpha_verdict(2, r("2/3")), AlphaVerdict::kSemistable);
  EXPECT_EQ(sufficient_alpha_verdict(2, r("3/4")), AlphaVerdict::kUniformlyStable);
  EXPECT_EQ(sufficient_alpha_verdict(4, r("1/2")), AlphaVerdict::kInconclusive);
  EXPECT_EQ(to_string(AlphaVerdict::kSemistable), "semistable (sufficient criterion)");
  EXPECT_EQ(semistable_alpha_lower_bound(2), r("1/3"));
}

TEST(WeightedBlowup, DiscrepancyExamples) {
  EXPECT_EQ(weighted_blowup_discrepancy({2, 1, Rational(1), Rational(1), DivisorKind::kInvariant}, r("1/2")), r("3/2"));
  EXPECT_EQ(weighted_blowup_discrepancy({2, 1, Rational(1), Rational(1), DivisorKind::kTransverse}, r("1/2")),
            r("3/2"));
  for (int d = 2; d <= 5; ++d) {
    for (int rr = 1; rr < d; ++rr) {
      const Rational k = r("3/2"), b = r("5/7");
      for (auto kind : {DivisorKind::kInvariant, DivisorKind::kTransverse}) {
        EXPECT_EQ(weighted_blowup_discrepancy({d, rr, k, b, kind}, Rational(0)), k / b + Rational(d - 1) * k);
      }
    }
  }
  EXPECT_THROW(weighted_blowup_discrepancy({2, 3, Rational(1), Rational(1), DivisorKind::kTransverse}, Rational(0)),
               std::invalid_argument);
  EXPECT_THROW(weighted_blowup_discrepancy({2, 2, Rational(1), Rational(1), DivisorKind::kInvariant}, Rational(0)),
               std::invalid_argument);
  EXPECT_THROW(weighted_blowup_discrepancy({2, 1, Rational(0), Rational(1), DivisorKind::kInvariant}, Rational(0)),
               std::invalid_argument);
}

TEST(WeightedBlowup, PullbackExamples) {
  auto p = weighted_blowup_pullback({2, 1, Rational(1), Rational(1), DivisorKind::kInvariant}, r("1/2"), r("1/2"));
  EXPECT_EQ(p.value, r("3/2"));
  EXPECT_TRUE(p.bound_ok);
  p = weighted_blowup_pullback({3, 2, r("3/2"), r("2/3"), DivisorKind::kTransverse}, Rational(0), r("2/3"));
  EXPECT_EQ(p.value, r("3/2") * Rational(3));
  EXPECT_TRUE(p.bound_ok);
  p = weighted_blowup_pullback({3, 1, Rational(2), Rational(2), DivisorKind::kTransverse}, r("1/2"), Rational(1));
  EXPECT_EQ(p.value, Rational(3));
  EXPECT_TRUE(p.bound_ok);
  EXPECT_THROW(weighted_blowup_pullback({3, 1, Rational(2), Rational(2), DivisorKind::kTransverse}, r("1/2"),
                                        Rational(3)),
               std::invalid_argument);
}

TEST(WeightedBlowup, PullbackMatchesOracleOnRandomData) {
  for (int trial = 0; trial < 500; ++trial) {
    const int d = static_cast<int>(uniform_int(2, 6));
    const bool inv = uniform_int(0, 1) == 1;
    const int rr = static_cast<int>(uniform_int(1, inv ? d - 1 : d));
    const Rational k = random_in(r("1/8"), Rational(3)) + r("1/8");
    const Rational a = random_in(Rational(0), Rational(1));
    const Rational b = a + random_in(r("1/16"), Rational(9)) + r("1/16");
    const Rational t = random_in(Rational(0), Rational(1));
    const auto p = weighted_blowup_pullback({d, rr, k, b, inv ? DivisorKind::kInvariant : DivisorKind::kTransverse},
                                            t, a);
    EXPECT_EQ(p.value, pullback_oracle(d, rr, k, b, t, inv, a));
    EXPECT_TRUE(p.bound_ok);
  }
}

TEST(Certificate, Examples) {
  EXPECT_EQ(epsilon_lc_certificate(2, Rational(9), r("1/3"), r("1/2")), r("1/4"));
  EXPECT_EQ(epsilon_lc_certificate(2, Rational(100), Rational(1), r("1/2")), r("1/2"));
  EXPECT_EQ(epsilon_lc_certificate(2, Rational(9), semistable_alpha_lower_bound(2), r("1/3")), r("1/4"));
  EXPECT_EQ(epsilon_lc_certificate(3, r("1/1000"), r("1/4"), r("1/2")), r("1/1000") / Rational(64 * 27));
  EXPECT_THROW(epsilon_lc_certificate(2, Rational(9), r("1/3"), Rational(1)), std::domain_error);
  EXPECT_THROW(epsilon_lc_certificate(2, Rational(9), r("1/3"), Rational(0)), std::domain_error);
  EXPECT_THROW(epsilon_lc_certificate(2, Rational(0), r("1/3"), r("1/2")), std::invalid_argument);
}
