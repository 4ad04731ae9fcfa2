#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibrect/errors.hpp"

namespace fibrect {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator, so equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral I>
  Rational(I n) : num_(n), den_(1) {}

  Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    normalize();
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return Rational(x.num_ + y.num_, x.den_);
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return Rational(x.num_ - y.num_, x.den_);
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw DivisionByZero();
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y) {
    const BigInt lhs = x.num_ * y.den_;
    const BigInt rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend int sign(const Rational& x) { return x.num_.sign(); }

  friend Rational inverse(const Rational& x) {
    if (x.num_ == 0) throw DivisionByZero("inverse of zero");
    return Rational(x.den_, x.num_);
  }

  // "p/q", or "p" when q = 1.
  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p", "-p", "p/q"; q may be negative and the result is reduced.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), std::move(d));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  static BigInt parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw ParseError("expected integer, got '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9')
        throw ParseError("expected integer, got '" + std::string(s) + "'");
    }
    BigInt v(std::string(s.substr(i)));
    return i == 1 ? BigInt(-v) : v;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& x) { return sign(x) < 0 ? -x : x; }

/// Largest integer not greater than x.
inline BigInt floor(const Rational& x) {
  BigInt q, r;
  boost::multiprecision::divide_qr(x.numerator(), x.denominator(), q, r);
  if (r < 0) --q;
  return q;
}

}  // namespace fibrect
