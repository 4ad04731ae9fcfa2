#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibrect/exact_arith.hpp"

// Presentation helpers. Nothing here feeds back into an exact decision.

namespace fibrect {

inline BigInt pow10(std::size_t digits) {
  BigInt p = 1;
  for (std::size_t i = 0; i < digits; ++i) p *= 10;
  return p;
}

/// floor(√5·10^digits)/10^digits, a truncated decimal for √5.
inline Rational sqrt5_decimal(std::size_t digits) {
  const BigInt scale = pow10(digits);
  return Rational(boost::multiprecision::sqrt(BigInt(5 * scale * scale)), scale);
}

/// Nearest integer, ties to even.
inline BigInt round_half_even(const Rational& x) {
  const BigInt q = floor(x);
  const Rational frac = x - Rational(q);
  const Rational half(1, 2);
  if (frac < half) return q;
  if (half < frac) return q + 1;
  return q % 2 == 0 ? q : BigInt(q + 1);
}

/// Rational value with √5 replaced by a `digits`-digit decimal.
inline Rational approximate(const QuadraticNumber& x, std::size_t digits) {
  return x.rational_part() + x.sqrt5_part() * sqrt5_decimal(digits);
}
inline Rational approximate(const Rational& x, std::size_t) { return x; }

/// Fixed-point text with `digits` decimals, rounded half to even.
inline std::string to_decimal_string(const Rational& x, std::size_t digits) {
  const BigInt scaled = round_half_even(x * Rational(pow10(digits)));
  const bool negative = scaled < 0;
  std::string s = (negative ? BigInt(-scaled) : scaled).str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

inline std::string to_decimal_string(const QuadraticNumber& x, std::size_t digits) {
  return to_decimal_string(approximate(x, digits + 20), digits);
}

}  // namespace fibrect
