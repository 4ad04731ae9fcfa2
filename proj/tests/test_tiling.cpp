#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fibrect/render.hpp"
#include "fibrect/tiling.hpp"
#include "oracles.hpp"

namespace fibrect {
namespace {

using Q = QuadraticNumber;

std::vector<Rational> sides(const Tiling& t) {
  std::vector<Rational> out;
  for (const auto& s : t.squares()) out.push_back(s.side);
  return out;
}

std::vector<Rational> oracle_sides(const Rational& w, const Rational& l) {
  const auto f = [](const Rational& r) { return oracle::Frac(r.numerator(), r.denominator()); };
  std::vector<Rational> out;
  for (const auto& s : oracle::greedy_sides(f(w), f(l)))
    out.emplace_back(boost::multiprecision::numerator(s), boost::multiprecision::denominator(s));
  return out;
}

TEST(Pave, Fib233x377Rectangle) {
  const Tiling t = pave(233, 377);
  const std::vector<Rational> expected = {233, 144, 89, 55, 34, 21, 13, 8, 5, 3, 2, 1, 1};
  EXPECT_EQ(sides(t), expected);
  EXPECT_TRUE(verify(t).certified());
}

TEST(Pave, UnitSquare) {
  const Tiling t = pave(1, 1);
  ASSERT_EQ(t.squares().size(), 1u);
  EXPECT_EQ(t.squares()[0], (PlacedSquare{0, 0, 1, 0}));
}

TEST(Pave, FiveHalvesStrip) {
  // Frozen from the subtraction oracle: 5/2 = [2; 2], four squares.
  ASSERT_EQ(oracle_sides(1, Rational(5, 2)),
            (std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 2)}));
  const Tiling t = pave(1, Rational(5, 2));
  EXPECT_EQ(sides(t), (std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(verify(t).certified());
}

TEST(Pave, SpiralPlacement) {
  // 3 x 5: West cut, the 2x3 remainder is tall so North, then East.
  const Tiling t = pave(3, 5);
  const std::vector<PlacedSquare> expected = {
      {0, 0, 3, 0},  // West
      {3, 1, 2, 1},  // North
      {4, 0, 1, 2},  // East
      {3, 0, 1, 3},  // remaining 1x1 square
  };
  ASSERT_EQ(t.squares().size(), 4u);
  EXPECT_EQ(t.squares(), expected);
}

TEST(Pave, RejectsBadDimensions) {
  EXPECT_THROW(pave(0, 1), InvalidDimensions);
  EXPECT_THROW(pave(-1, 1), InvalidDimensions);
  EXPECT_THROW(pave(2, 1), InvalidDimensions);
}

TEST(Pave, RandomRationalRectanglesAreCertified) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(1, 50);
  for (int i = 0; i < 200; ++i) {
    Rational w(d(rng), d(rng)), l(d(rng), d(rng));
    if (l < w) std::swap(w, l);
    const Tiling t = pave(w, l);
    EXPECT_TRUE(verify(t).certified()) << w << " x " << l;
    EXPECT_EQ(sides(t), oracle_sides(w, l));
  }
}

TEST(Pave, SquareCountIsPartialQuotientSum) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(1, 1000);
  for (int i = 0; i < 100; ++i) {
    int p = d(rng), q = d(rng);
    if (q < p) std::swap(p, q);
    const Tiling t = pave(p, q);
    EXPECT_EQ(oracle::Int(t.squares().size()), oracle::partial_quotient_sum(p, q)) << p << "/" << q;
  }
}

TEST(Pave, Deterministic) {
  EXPECT_EQ(to_json(pave(Rational(7, 3), Rational(41, 9))),
            to_json(pave(Rational(7, 3), Rational(41, 9))));
}

TEST(FibonacciTiling, Examples) {
  EXPECT_EQ(fibonacci_tiling(12), pave(233, 377));
  EXPECT_EQ(fibonacci_tiling(12).squares().size(), 13u);
  const Tiling t0 = fibonacci_tiling(0);
  EXPECT_EQ(t0.width(), Rational(1));
  EXPECT_EQ(t0.length(), Rational(1));
  EXPECT_EQ(sides(t0), (std::vector<Rational>{1}));
  const Tiling t1 = fibonacci_tiling(1);
  EXPECT_EQ(t1.length(), Rational(2));
  EXPECT_EQ(sides(t1), (std::vector<Rational>{1, 1}));
  EXPECT_THROW(fibonacci_tiling(-1), IndexOutOfRange);
}

TEST(FibonacciTiling, SidesAreTheFibonacciNumbers) {
  for (int n = 1; n <= 20; ++n) {
    const Tiling t = fibonacci_tiling(n);
    ASSERT_EQ(t.squares().size(), static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) EXPECT_EQ(t.squares()[i].side, Rational(fib(n - i)));
    const auto report = verify(t);
    EXPECT_TRUE(report.certified());
    EXPECT_EQ(report.duplicates, (std::map<Rational, std::size_t>{{Rational(1), 2}}));
    Rational area;
    for (const auto& s : t.squares()) area += s.side * s.side;
    EXPECT_EQ(area, Rational(fib(n) * fib(n + 1)));
  }
}

TEST(PavePrefix, Golden) {
  const RectState<Q> golden(1, Q::phi());
  const auto t3 = pave_prefix(golden, 3);
  ASSERT_EQ(t3.squares().size(), 3u);
  EXPECT_EQ(t3.squares()[0].side, Q(1));
  EXPECT_EQ(t3.squares()[1].side, Q::phi() - Q(1));
  EXPECT_EQ(t3.squares()[2].side, Q(2) - Q::phi());
  EXPECT_EQ(Q::phi() - Q(1), inverse(Q::phi()));
  EXPECT_EQ(Q(2) - Q::phi(), inverse(Q::phi() * Q::phi()));
  EXPECT_TRUE(t3.partial());

  const auto t1 = pave_prefix(golden, 1);
  ASSERT_EQ(t1.squares().size(), 1u);
  EXPECT_EQ(t1.squares()[0], (BasicSquare<Q>{0, 0, 1, 0}));
}

TEST(PavePrefix, GoldenSidesFormGeometricSequence) {
  const auto t = pave_prefix(RectState<Q>(1, Q::phi()), 30);
  const Q ratio = Q::phi() - Q(1);
  const auto& sq = t.squares();
  for (std::size_t i = 1; i < sq.size(); ++i) EXPECT_EQ(sq[i].side, sq[i - 1].side * ratio);
  std::set<Q> distinct;
  for (const auto& s : sq) distinct.insert(s.side);
  EXPECT_EQ(distinct.size(), 30u);
  const auto report = verify(t);
  EXPECT_TRUE(report.sound());
  EXPECT_FALSE(report.area);
  EXPECT_TRUE(report.duplicates.empty());
}

TEST(PavePrefix, FailsBeforeK) {
  try {
    pave_prefix(RectState<Rational>(8, 13), 6);
    FAIL() << "expected PatternFailsBeforeK";
  } catch (const PatternFailsBeforeK& e) {
    EXPECT_EQ(e.failing_step(), 5u);
  }
  EXPECT_EQ(pave_prefix(RectState<Rational>(8, 13), 5).squares().size(), 5u);
  EXPECT_THROW(pave_prefix(RectState<Rational>(2, 2), 1), NotAProperRectangle);
}

TEST(PavePrefix, RationalPrefixMatchesFullPaving) {
  const auto prefix = pave_prefix(RectState<Rational>(233, 377), 8);
  const auto full = pave(233, 377);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(prefix.squares()[i], full.squares()[i]);
}

TEST(Verify, DetectsTranslation) {
  const Tiling t = fibonacci_tiling(12);
  auto squares = t.squares();
  squares[3].x += Rational(1, 2);
  const auto report = verify(t.with_squares(squares));
  EXPECT_FALSE(report.disjointness);
  EXPECT_TRUE(report.area);
}

TEST(Verify, DetectsEscapeAndMissingArea) {
  const Tiling t = pave(3, 5);
  auto squares = t.squares();
  squares[2].x = 5;  // pokes out on the right
  EXPECT_FALSE(verify(t.with_squares(squares)).containment);
  squares = t.squares();
  squares.pop_back();
  const auto report = verify(t.with_squares(squares));
  EXPECT_TRUE(report.sound());
  EXPECT_FALSE(report.area);
}

TEST(Verify, SingleSquareAndDimensions) {
  const auto report = verify(Tiling(1, 1, {{0, 0, 1, 0}}));
  EXPECT_TRUE(report.certified());
  EXPECT_TRUE(report.duplicates.empty());
  EXPECT_THROW(Tiling(0, 0), InvalidDimensions);
}

TEST(Verify, EdgeContactIsNotOverlap) {
  const Tiling t(1, 2, {{0, 0, 1, 0}, {1, 0, 1, 1}});
  EXPECT_TRUE(verify(t).certified());
  const Tiling stacked(1, 2, {{0, 0, 1, 0}, {0, 0, 1, 1}});
  EXPECT_FALSE(verify(stacked).disjointness);
}

}  // namespace
}  // namespace fibrect
