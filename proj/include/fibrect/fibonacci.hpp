#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibrect/errors.hpp"
#include "fibrect/exact_arith.hpp"

namespace fibrect {

/// Fibonacci numbers with f(0) = f(1) = 1, extended by f(-1) = 0 so that
/// the closed form of M^n holds at n = 1.
inline BigInt fib(std::int64_t n) {
  if (n < -1) throw IndexOutOfRange("fib index " + std::to_string(n) + " < -1");
  if (n == -1) return 0;
  BigInt prev = 0, cur = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Consecutive values f(first), ..., f(last); cheaper than repeated fib().
inline std::vector<BigInt> fib_range(std::int64_t first, std::int64_t last) {
  if (first < -1) throw IndexOutOfRange("fib index " + std::to_string(first) + " < -1");
  std::vector<BigInt> out;
  if (last < first) return out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  BigInt prev = 1, cur = 0;  // f(-2), f(-1)
  for (std::int64_t i = -1; i <= last; ++i) {
    if (i >= first) out.push_back(cur);
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

struct SumOfSquares {
  BigInt lhs;  // Σ_{i=0..n} f(i)²
  BigInt rhs;  // f(n)·f(n+1)
  bool equal;
};

inline SumOfSquares sum_of_squares(std::int64_t n) {
  if (n < 0) throw IndexOutOfRange("sum_of_squares needs n >= 0");
  const auto f = fib_range(0, n + 1);
  BigInt lhs = 0;
  for (std::int64_t i = 0; i <= n; ++i) lhs += f[i] * f[i];
  BigInt rhs = f[n] * f[n + 1];
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

/// f(n+1)/f(n).
inline Rational convergent(std::int64_t n) {
  if (n < 0) throw IndexOutOfRange("convergent needs n >= 0");
  const auto f = fib_range(n, n + 1);
  return Rational(f[1], f[0]);
}

enum class BoundSide { lower, upper };

inline const char* to_string(BoundSide s) {
  return s == BoundSide::lower ? "lower" : "upper";
}

struct SandwichEntry {
  Rational value;
  BoundSide side;

  friend bool operator==(const SandwichEntry&, const SandwichEntry&) = default;
};

/// Convergents 0..n, even ones tagged lower and odd ones upper.
inline std::vector<SandwichEntry> sandwich(std::int64_t n) {
  if (n < 0) throw IndexOutOfRange("sandwich needs n >= 0");
  const auto f = fib_range(0, n + 1);
  std::vector<SandwichEntry> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) {
    out.push_back({Rational(f[k + 1], f[k]),
                   k % 2 == 0 ? BoundSide::lower : BoundSide::upper});
  }
  return out;
}

/// Checks the sandwich contract exactly: lower < Φ < upper, lower entries
/// strictly increasing, upper entries strictly decreasing.
inline bool sandwich_consistent(const std::vector<SandwichEntry>& entries) {
  const QuadraticNumber phi = QuadraticNumber::phi();
  const Rational* last_lower = nullptr;
  const Rational* last_upper = nullptr;
  for (const auto& e : entries) {
    const int s = sign(phi - QuadraticNumber(e.value));
    if (e.side == BoundSide::lower) {
      if (s != 1) return false;
      if (last_lower && !(*last_lower < e.value)) return false;
      last_lower = &e.value;
    } else {
      if (s != -1) return false;
      if (last_upper && !(e.value < *last_upper)) return false;
      last_upper = &e.value;
    }
  }
  return true;
}

/// 2×2 integer matrix [[m11, m12], [m21, m22]].
struct IntMat2 {
  BigInt m11, m12, m21, m22;

  static IntMat2 identity() { return {1, 0, 0, 1}; }

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
            x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
  }

  friend bool operator==(const IntMat2&, const IntMat2&) = default;

  BigInt det() const { return m11 * m22 - m12 * m21; }

  // "[[a, b], [c, d]]"
  std::string to_string() const {
    return "[[" + m11.str() + ", " + m12.str() + "], [" + m21.str() + ", " +
           m22.str() + "]]";
  }
};

/// Image of the column (w, l) under m.
template <ExactScalar S>
std::pair<S, S> apply(const IntMat2& m, const S& w, const S& l) {
  const auto lift = [](const BigInt& v) { return S(Rational(v)); };
  return {lift(m.m11) * w + lift(m.m12) * l, lift(m.m21) * w + lift(m.m22) * l};
}

/// The cut-off matrix M = [[-1, 1], [1, 0]]: M·(W, L) = (L - W, W).
inline IntMat2 mat_m() { return {-1, 1, 1, 0}; }

/// M^n = (-1)^n [[f(n), -f(n-1)], [-f(n-1), f(n-2)]] for n >= 1.
inline IntMat2 mat_power_closed(std::int64_t n) {
  if (n < 1) throw IndexOutOfRange("mat_power_closed needs n >= 1");
  const auto f = fib_range(n - 2, n);  // f(n-2), f(n-1), f(n)
  const int s = n % 2 == 0 ? 1 : -1;
  return {s * f[2], -s * f[1], -s * f[1], s * f[0]};
}

/// M^n by repeated multiplication; the independent check on the closed form.
inline IntMat2 mat_power_iter(std::int64_t n) {
  if (n < 0) throw IndexOutOfRange("mat_power_iter needs n >= 0");
  IntMat2 out = IntMat2::identity();
  const IntMat2 m = mat_m();
  for (std::int64_t i = 0; i < n; ++i) out = out * m;
  return out;
}

}  // namespace fibrect
