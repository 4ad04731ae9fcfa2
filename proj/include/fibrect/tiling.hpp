#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "fibrect/cutoff.hpp"
#include "fibrect/errors.hpp"
#include "fibrect/exact_arith.hpp"
#include "fibrect/fibonacci.hpp"

namespace fibrect {

// Model frame: x to the right, y up, origin at the bottom-left corner. The
// rectangle is [0, length] x [0, width].

template <ExactScalar S>
struct BasicSquare {
  S x;     // left edge
  S y;     // bottom edge
  S side;
  std::size_t index = 0;  // placement order

  friend bool operator==(const BasicSquare&, const BasicSquare&) = default;
};

template <ExactScalar S>
class BasicTiling {
 public:
  using scalar_type = S;
  using square_type = BasicSquare<S>;

  /// `partial` marks a prefix of a longer (possibly infinite) paving; such
  /// tilings cannot satisfy the area check.
  BasicTiling(S width, S length, std::vector<square_type> squares = {},
              bool partial = false)
      : width_(std::move(width)),
        length_(std::move(length)),
        squares_(std::move(squares)),
        partial_(partial) {
    if (sign(width_) <= 0 || sign(length_) <= 0)
      throw InvalidDimensions("tiling dimensions must be positive");
  }

  const S& width() const noexcept { return width_; }
  const S& length() const noexcept { return length_; }
  const std::vector<square_type>& squares() const noexcept { return squares_; }
  bool partial() const noexcept { return partial_; }

  /// Copy with a different square list; used to build tampered instances.
  BasicTiling with_squares(std::vector<square_type> squares) const {
    return BasicTiling(width_, length_, std::move(squares), partial_);
  }

  friend bool operator==(const BasicTiling&, const BasicTiling&) = default;

 private:
  S width_;
  S length_;
  std::vector<square_type> squares_;
  bool partial_;
};

using PlacedSquare = BasicSquare<Rational>;
using Tiling = BasicTiling<Rational>;
using QuadTiling = BasicTiling<QuadraticNumber>;

namespace detail {

// Cuts maximal squares off a shrinking sub-rectangle [x0, x1] x [y0, y1].
// The cursor cycles West, North, East, South; each cut uses the first valid
// edge at or after the cursor, then the cursor moves one past it. Wide
// remainders only admit West/East, tall ones North/South.
template <ExactScalar S>
class SpiralCutter {
 public:
  SpiralCutter(const S& width, const S& length)
      : x0_(0), x1_(length), y0_(0), y1_(width) {}

  bool done() const { return done_; }

  BasicSquare<S> cut() {
    const S w = x1_ - x0_;
    const S h = y1_ - y0_;
    BasicSquare<S> sq{x0_, y0_, w, next_index_++};
    if (w == h) {
      done_ = true;
      return sq;
    }
    const bool wide = h < w;
    while (wide != (cursor_ == kWest || cursor_ == kEast)) cursor_ = (cursor_ + 1) % 4;
    switch (cursor_) {
      case kWest:
        sq = {x0_, y0_, h, sq.index};
        x0_ = x0_ + h;
        break;
      case kNorth:
        sq = {x0_, y1_ - w, w, sq.index};
        y1_ = y1_ - w;
        break;
      case kEast:
        sq = {x1_ - h, y0_, h, sq.index};
        x1_ = x1_ - h;
        break;
      default:  // South
        sq = {x0_, y0_, w, sq.index};
        y0_ = y0_ + w;
        break;
    }
    cursor_ = (cursor_ + 1) % 4;
    return sq;
  }

 private:
  static constexpr int kWest = 0, kNorth = 1, kEast = 2, kSouth = 3;

  S x0_, x1_, y0_, y1_;
  int cursor_ = kWest;
  std::size_t next_index_ = 0;
  bool done_ = false;
};

}  // namespace detail

/// Greedy spiral paving of the width×length rectangle (width vertical).
/// Always terminates for rationals; the square count is the sum of the
/// continued-fraction partial quotients of length/width.
inline Tiling pave(const Rational& width, const Rational& length) {
  if (sign(width) <= 0)
    throw InvalidDimensions("width must be positive, got " + width.to_string());
  if (length < width)
    throw InvalidDimensions("need width <= length, got " + width.to_string() +
                            " > " + length.to_string());
  detail::SpiralCutter<Rational> cutter(width, length);
  std::vector<PlacedSquare> squares;
  while (!cutter.done()) squares.push_back(cutter.cut());
  return Tiling(width, length, std::move(squares));
}

/// Paving of the f(n) × f(n+1) rectangle.
inline Tiling fibonacci_tiling(std::int64_t n) {
  if (n < 0) throw IndexOutOfRange("fibonacci_tiling needs n >= 0");
  const auto f = fib_range(n, n + 1);
  return pave(Rational(f[0]), Rational(f[1]));
}

/// First k squares of the cut-off paving of r. Every state before the k-th
/// cut must still satisfy w < l, otherwise PatternFailsBeforeK names the
/// first state that does not.
template <ExactScalar S>
BasicTiling<S> pave_prefix(const RectState<S>& r, std::size_t k) {
  detail::require_proper(r);
  RectState<S> state = r;
  for (std::size_t j = 1; j < k; ++j) {
    state = step(state);
    if (!state.proper()) throw PatternFailsBeforeK(j, k);
  }
  detail::SpiralCutter<S> cutter(r.w(), r.l());
  std::vector<BasicSquare<S>> squares;
  squares.reserve(k);
  for (std::size_t j = 0; j < k; ++j) squares.push_back(cutter.cut());
  return BasicTiling<S>(r.w(), r.l(), std::move(squares), true);
}

template <ExactScalar S>
struct VerificationReport {
  bool containment = false;
  bool disjointness = false;
  bool area = false;
  std::map<S, std::size_t> duplicates;  // side -> count, only counts >= 2

  /// Containment and disjointness: enough for a prefix of a paving.
  bool sound() const { return containment && disjointness; }
  /// All three checks: the squares exactly pave the rectangle.
  bool certified() const { return containment && disjointness && area; }
};

/// Exact paving checks: containment in the rectangle, pairwise disjoint
/// interiors, and Σ side² = width·length.
template <ExactScalar S>
VerificationReport<S> verify(const BasicTiling<S>& t) {
  VerificationReport<S> report;
  const auto& sq = t.squares();
  const S zero(0);

  report.containment = std::all_of(sq.begin(), sq.end(), [&](const auto& s) {
    return sign(s.side) > 0 && !(s.x < zero) && !(s.y < zero) &&
           !(t.length() < s.x + s.side) && !(t.width() < s.y + s.side);
  });

  // Sweep in x order; only squares whose x-range starts before the current
  // one ends can overlap it.
  std::vector<std::size_t> order(sq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sq[a].x < sq[b].x; });
  report.disjointness = true;
  for (std::size_t i = 0; i < order.size() && report.disjointness; ++i) {
    const auto& a = sq[order[i]];
    const S a_right = a.x + a.side;
    const S a_top = a.y + a.side;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& b = sq[order[j]];
      if (!(b.x < a_right)) break;
      if (b.y < a_top && a.y < b.y + b.side && a.x < b.x + b.side) {
        report.disjointness = false;
        break;
      }
    }
  }

  S total(0);
  std::map<S, std::size_t> counts;
  for (const auto& s : sq) {
    total += s.side * s.side;
    ++counts[s.side];
  }
  report.area = total == t.width() * t.length();
  for (auto& [side, n] : counts)
    if (n >= 2) report.duplicates.emplace(side, n);
  return report;
}

}  // namespace fibrect
