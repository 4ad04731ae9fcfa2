#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibrect/errors.hpp"
#include "fibrect/exact_arith.hpp"
#include "fibrect/fibonacci.hpp"

namespace fibrect {

/// Width/length pair of the cut-off process. Both sides are positive;
/// w < l is not required, since orbits end on the first state that breaks it.
template <ExactScalar S>
class RectState {
 public:
  RectState(S w, S l) : w_(std::move(w)), l_(std::move(l)) {
    if (sign(w_) <= 0 || sign(l_) <= 0)
      throw NotAProperRectangle("rectangle sides must be positive, got (" +
                                w_.to_string() + ", " + l_.to_string() + ")");
  }

  const S& w() const noexcept { return w_; }
  const S& l() const noexcept { return l_; }

  /// 0 < w < l.
  bool proper() const { return w_ < l_; }

  friend bool operator==(const RectState&, const RectState&) = default;

 private:
  S w_;
  S l_;
};

template <ExactScalar S>
RectState(S, S) -> RectState<S>;

namespace detail {
template <ExactScalar S>
void require_proper(const RectState<S>& r) {
  if (!r.proper())
    throw NotAProperRectangle("need w < l, got (" + r.w().to_string() + ", " +
                              r.l().to_string() + ")");
}
}  // namespace detail

/// Cut the w×w square off: (w, l) -> (l - w, w).
template <ExactScalar S>
RectState<S> step(const RectState<S>& r) {
  detail::require_proper(r);
  return RectState<S>(r.l() - r.w(), r.w());
}

/// [r, step(r), ...] with at most n steps; ends early on the first state
/// that is not proper, and that state is included.
template <ExactScalar S>
std::vector<RectState<S>> orbit(const RectState<S>& r, std::size_t n) {
  detail::require_proper(r);
  std::vector<RectState<S>> out{r};
  for (std::size_t i = 0; i < n && out.back().proper(); ++i)
    out.push_back(step(out.back()));
  return out;
}

/// True iff l/w equals the golden ratio exactly. Never true for rationals.
template <ExactScalar S>
bool is_golden(const RectState<S>& r) {
  if constexpr (is_quadratic_v<S>) {
    return r.l() == QuadraticNumber::phi() * r.w();
  } else {
    return false;
  }
}

enum class FailureMode { equal, reversed };

inline const char* to_string(FailureMode m) {
  return m == FailureMode::equal ? "equal" : "reversed";
}

/// Either the pattern continues forever (golden) or the first step at which
/// w >= l, with the way it breaks.
struct Classification {
  enum class Verdict { golden_infinite, fails_at };

  Verdict verdict = Verdict::golden_infinite;
  std::size_t step = 0;
  FailureMode mode = FailureMode::equal;

  static Classification golden() { return {}; }
  static Classification fails(std::size_t k, FailureMode m) {
    return {Verdict::fails_at, k, m};
  }

  bool is_golden() const { return verdict == Verdict::golden_infinite; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Golden ratios are certified directly: step maps a (1, Φ)-shaped state to
/// another (1, Φ)-shaped state, so iterating proves nothing more. Every other
/// ratio is iterated until w >= l.
template <ExactScalar S>
Classification classify(const RectState<S>& r,
                        std::size_t max_steps = kDefaultStepBudget) {
  detail::require_proper(r);
  if (is_golden(r)) return Classification::golden();
  RectState<S> cur = r;
  for (std::size_t k = 1; k <= max_steps; ++k) {
    cur = step(cur);
    if (cur.w() == cur.l()) return Classification::fails(k, FailureMode::equal);
    if (cur.l() < cur.w()) return Classification::fails(k, FailureMode::reversed);
  }
  throw StepBudgetExhausted(max_steps);
}

/// leftW·W + leftL·L < rightW·W + rightL·L
struct LinearInequality {
  BigInt left_w, left_l, right_w, right_l;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;

  template <ExactScalar S>
  bool holds(const S& w, const S& l) const {
    const auto lift = [](const BigInt& v) { return S(Rational(v)); };
    return lift(left_w) * w + lift(left_l) * l <
           lift(right_w) * w + lift(right_l) * l;
  }

  std::string to_string() const {
    const auto side = [](const BigInt& cw, const BigInt& cl) {
      std::string s;
      const auto term = [&s](const BigInt& c, const char* var) {
        if (c == 0) return;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        const BigInt a = c < 0 ? BigInt(-c) : c;
        if (a != 1) s += a.str();
        s += var;
      };
      term(cw, "W");
      term(cl, "L");
      return s.empty() ? std::string("0") : s;
    };
    return side(left_w, left_l) + " < " + side(right_w, right_l);
  }
};

/// Normalized chain entries 0..n: f(k+1)·W < f(k)·L for even k and
/// f(k)·L < f(k+1)·W for odd k. Entry k is equivalent to W⁽ᵏ⁾ < L⁽ᵏ⁾.
inline std::vector<LinearInequality> inequality_chain(std::size_t n) {
  const auto f = fib_range(0, static_cast<std::int64_t>(n) + 1);
  std::vector<LinearInequality> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k % 2 == 0)
      out.push_back({f[k + 1], 0, 0, f[k]});
    else
      out.push_back({0, f[k], f[k + 1], 0});
  }
  return out;
}

enum class RatioDirection { ratio_greater, ratio_less };

inline const char* to_string(RatioDirection d) {
  return d == RatioDirection::ratio_greater ? "ratio_greater" : "ratio_less";
}

struct RatioBound {
  Rational value;
  RatioDirection direction;

  friend bool operator==(const RatioBound&, const RatioBound&) = default;

  /// Strict check of l/w against the bound.
  template <ExactScalar S>
  bool satisfied_by(const S& ratio) const {
    const S v = S(value);
    return direction == RatioDirection::ratio_greater ? v < ratio : ratio < v;
  }
};

/// The bound on L/W implied by chain entry k.
inline RatioBound ratio_bound(std::size_t k) {
  return {convergent(static_cast<std::int64_t>(k)),
          k % 2 == 0 ? RatioDirection::ratio_greater : RatioDirection::ratio_less};
}

}  // namespace fibrect
