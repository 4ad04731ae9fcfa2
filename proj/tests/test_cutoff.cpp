#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fibrect/cutoff.hpp"
#include "oracles.hpp"

namespace fibrect {
namespace {

using Q = QuadraticNumber;
using RS = RectState<Rational>;
using QS = RectState<Q>;

const Q kPhi = Q::phi();

// Brute-force failure step by repeated subtraction on boost rationals.
std::pair<std::size_t, FailureMode> oracle_failure(oracle::Frac w, oracle::Frac l) {
  for (std::size_t k = 1;; ++k) {
    const oracle::Frac nw = l - w;
    l = w;
    w = nw;
    if (w == l) return {k, FailureMode::equal};
    if (w > l) return {k, FailureMode::reversed};
  }
}

TEST(RectState, RejectsNonPositiveSides) {
  EXPECT_THROW(RS(0, 1), NotAProperRectangle);
  EXPECT_THROW(RS(1, Rational(-1, 2)), NotAProperRectangle);
  EXPECT_NO_THROW(RS(2, 1));
}

TEST(Step, Examples) {
  EXPECT_EQ(step(RS(233, 377)), RS(144, 233));
  EXPECT_EQ(step(QS(1, kPhi)), QS(kPhi - Q(1), 1));
  EXPECT_THROW(step(RS(1, 1)), NotAProperRectangle);
  EXPECT_THROW(step(RS(2, 1)), NotAProperRectangle);
}

TEST(Step, GoldenRectangleReproducesItsShape) {
  const auto next = step(QS(1, kPhi));
  EXPECT_EQ(next.l() / next.w(), kPhi);
}

TEST(Orbit, Examples) {
  EXPECT_EQ(orbit(RS(8, 13), 3), (std::vector<RS>{RS(8, 13), RS(5, 8), RS(3, 5), RS(2, 3)}));
  EXPECT_EQ(orbit(RS(1, 2), 5), (std::vector<RS>{RS(1, 2), RS(1, 1)}));
  const auto g = orbit(QS(1, kPhi), 2);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[1], QS(kPhi - Q(1), 1));
  EXPECT_EQ(g[2], QS(Q(2) - kPhi, kPhi - Q(1)));
  EXPECT_EQ(Q(2) - kPhi, Q(Rational(3, 2), Rational(-1, 2)));
  EXPECT_EQ(sign(Q(2) - kPhi), 1);
  EXPECT_THROW(orbit(RS(3, 2), 4), NotAProperRectangle);
  EXPECT_EQ(orbit(RS(1, 3), 0).size(), 1u);
}

TEST(Orbit, AgreesWithMatrixPowers) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(1, 500);
  for (int trial = 0; trial < 100; ++trial) {
    Rational w(d(rng), d(rng)), l(d(rng), d(rng));
    if (l == w) continue;
    if (l < w) std::swap(w, l);
    const auto states = orbit(RS(w, l), 30);
    for (std::size_t n = 1; n < states.size(); ++n) {
      const auto [wn, ln] = apply(mat_power_iter(static_cast<std::int64_t>(n)), w, l);
      EXPECT_EQ(states[n].w(), wn);
      EXPECT_EQ(states[n].l(), ln);
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(QS(1, kPhi)), Classification::golden());
  EXPECT_EQ(classify(RS(1, 2)), Classification::fails(1, FailureMode::equal));
  EXPECT_EQ(classify(RS(8, 13)), Classification::fails(5, FailureMode::equal));
  EXPECT_THROW(classify(RS(1, 1)), NotAProperRectangle);
  EXPECT_THROW(classify(RS(5, 3)), NotAProperRectangle);
}

TEST(Classify, GoldenIsScaleInvariant) {
  const Q w(Rational(3, 7), Rational(2));
  EXPECT_TRUE(classify(QS(w, w * kPhi)).is_golden());
}

TEST(Classify, ReversedMode) {
  // l/w = 5/2 > 2: the first cut leaves a remainder wider than it is long.
  EXPECT_EQ(classify(RS(2, 5)), Classification::fails(1, FailureMode::reversed));
  // Just below the golden ratio, between 8/5 and 21/13.
  const auto c = classify(RS(1, Rational(13, 8) - Rational(1, 1000)));
  EXPECT_FALSE(c.is_golden());
  EXPECT_GT(c.step, 4u);
}

TEST(Classify, NonGoldenQuadraticFails) {
  // sqrt5 - 1/2 ≈ 1.736 lies in (5/3, 2), so the k = 2 bound (> 3/2) holds and
  // the k = 3 bound (< 5/3) does not.
  const auto c = classify(QS(1, Q(Rational(-1, 2), 1)));
  EXPECT_EQ(c, Classification::fails(3, FailureMode::reversed));
  // A very close quadratic approximation still fails in finitely many steps.
  const Q near_phi = kPhi + Q(Rational(1, 1000000));
  EXPECT_FALSE(classify(QS(1, near_phi)).is_golden());
}

TEST(Classify, BudgetExhausted) {
  EXPECT_THROW(classify(RS(377, 610), 10), StepBudgetExhausted);
  EXPECT_NO_THROW(classify(RS(377, 610), 14));
}

TEST(Classify, ConvergentLaw) {
  for (int n = 1; n <= 20; ++n) {
    const RS r(Rational(fib(n)), Rational(fib(n + 1)));
    EXPECT_EQ(classify(r, 10 * n + 10), Classification::fails(n, FailureMode::equal)) << n;
  }
}

TEST(Classify, RandomRationalsFailAndMatchOracle) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> den(2, 10000);
  std::set<Rational> convergents;
  for (int k = 0; k <= 40; ++k) convergents.insert(convergent(k));
  int tested = 0;
  while (tested < 500) {
    const int q = den(rng);
    std::uniform_int_distribution<int> num(q + 1, std::min(2 * q - 1, 10000));
    if (q + 1 > std::min(2 * q - 1, 10000)) continue;
    const int p = num(rng);
    const Rational ratio(p, q);
    if (convergents.count(ratio)) continue;
    ++tested;
    const RS r(1, ratio);
    const Classification c = classify(r, static_cast<std::size_t>(p + q));
    ASSERT_FALSE(c.is_golden());
    const auto [k, mode] = oracle_failure(1, oracle::Frac(p, q));
    EXPECT_EQ(c.step, k) << ratio;
    EXPECT_EQ(c.mode, mode) << ratio;

    // Sandwich consistency: bounds j < k hold strictly, bound k fails.
    for (std::size_t j = 0; j < c.step; ++j) EXPECT_TRUE(ratio_bound(j).satisfied_by(ratio));
    EXPECT_FALSE(ratio_bound(c.step).satisfied_by(ratio));
  }
}

TEST(InequalityChain, Examples) {
  const auto chain = inequality_chain(6);
  ASSERT_EQ(chain.size(), 7u);
  EXPECT_EQ(chain[0], (LinearInequality{1, 0, 0, 1}));
  EXPECT_EQ(chain[0].to_string(), "W < L");
  EXPECT_EQ(chain[1].to_string(), "L < 2W");
  EXPECT_EQ(chain[2].to_string(), "3W < 2L");
  EXPECT_EQ(chain[3], (LinearInequality{0, 3, 5, 0}));
  EXPECT_EQ(chain[3].to_string(), "3L < 5W");
  EXPECT_EQ(chain[4].to_string(), "8W < 5L");
  EXPECT_EQ(chain[5].to_string(), "8L < 13W");
  EXPECT_EQ(chain[6], (LinearInequality{21, 0, 0, 13}));
  EXPECT_EQ(chain[6].to_string(), "21W < 13L");
  EXPECT_EQ(inequality_chain(0).size(), 1u);
}

TEST(InequalityChain, EquivalentToClosedFormExpansion) {
  // L^(k) - W^(k) = (m21 - m11)·W + (m22 - m12)·L with M^k = [[m11, m12], [m21, m22]];
  // entry k must have exactly these coefficients on (right - left).
  const auto chain = inequality_chain(20);
  for (std::int64_t k = 0; k <= 20; ++k) {
    const IntMat2 m = k == 0 ? IntMat2::identity() : mat_power_closed(k);
    const auto& e = chain[k];
    EXPECT_EQ(e.right_w - e.left_w, m.m21 - m.m11) << k;
    EXPECT_EQ(e.right_l - e.left_l, m.m22 - m.m12) << k;
  }
}

TEST(InequalityChain, HoldsForGoldenUpTo40) {
  for (const auto& e : inequality_chain(40)) EXPECT_TRUE(e.holds(Q(1), kPhi));
}

TEST(RatioBound, Examples) {
  EXPECT_EQ(ratio_bound(0), (RatioBound{Rational(1), RatioDirection::ratio_greater}));
  EXPECT_EQ(ratio_bound(5), (RatioBound{Rational(13, 8), RatioDirection::ratio_less}));
  EXPECT_EQ(ratio_bound(6), (RatioBound{Rational(21, 13), RatioDirection::ratio_greater}));
  EXPECT_TRUE(ratio_bound(5).satisfied_by(kPhi));
  EXPECT_FALSE(ratio_bound(5).satisfied_by(Q(Rational(13, 8))));
}

TEST(GoldenOrbit, ShapeFixedFor200Steps) {
  const auto states = orbit(QS(1, kPhi), 200);
  ASSERT_EQ(states.size(), 201u);
  for (const auto& s : states) EXPECT_EQ(s.l() / s.w(), kPhi);
}

}  // namespace
}  // namespace fibrect
