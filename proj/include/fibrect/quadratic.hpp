#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "fibrect/errors.hpp"
#include "fibrect/rational.hpp"

namespace fibrect {

/// Element a + b·√5 of the real quadratic field Q(√5). Since √5 is
/// irrational the pair (a, b) is unique, so equality is componentwise.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a) : a_(std::move(a)) {}
  template <std::integral I>
  QuadraticNumber(I a) : a_(a) {}
  QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadraticNumber sqrt5() { return {Rational(0), Rational(1)}; }
  /// The golden ratio (1 + √5)/2.
  static QuadraticNumber phi() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt5_part() const noexcept { return b_; }

  bool is_rational() const { return sign(b_) == 0; }

  /// a² − 5b², the field norm; zero only for zero.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  QuadraticNumber conjugate() const { return {a_, -b_}; }

  friend QuadraticNumber operator+(const QuadraticNumber& x,
                                   const QuadraticNumber& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x,
                                   const QuadraticNumber& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x,
                                   const QuadraticNumber& y) {
    return {x.a_ * y.a_ + Rational(5) * x.b_ * y.b_,
            x.a_ * y.b_ + y.a_ * x.b_};
  }
  friend QuadraticNumber operator/(const QuadraticNumber& x,
                                   const QuadraticNumber& y) {
    return x * inverse(y);
  }
  QuadraticNumber operator-() const { return {-a_, -b_}; }

  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }
  QuadraticNumber& operator/=(const QuadraticNumber& y) { return *this = *this / y; }

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

  // Exact sign of the real number a + b√5. Only the mixed-sign case needs
  // work: there the larger of a² and 5b² wins.
  friend int sign(const QuadraticNumber& x) {
    const int sa = sign(x.a_);
    const int sb = sign(x.b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const int cmp = sign(x.a_ * x.a_ - Rational(5) * x.b_ * x.b_);
    return cmp * sa;
  }

  friend std::strong_ordering operator<=>(const QuadraticNumber& x,
                                          const QuadraticNumber& y) {
    const int s = sign(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend QuadraticNumber inverse(const QuadraticNumber& x) {
    const Rational n = x.norm();
    if (sign(n) == 0) throw DivisionByZero("inverse of zero");
    return {x.a_ / n, -x.b_ / n};
  }

  // "a+b*sqrt5", both parts in rational text form.
  std::string to_string() const {
    return a_.to_string() + "+" + b_.to_string() + "*sqrt5";
  }

  // Accepts the form written by to_string(); a plain rational is also
  // accepted and embedded with b = 0.
  static QuadraticNumber parse(std::string_view text) {
    constexpr std::string_view suffix = "*sqrt5";
    if (text.size() < suffix.size() ||
        text.substr(text.size() - suffix.size()) != suffix) {
      return QuadraticNumber(Rational::parse(text));
    }
    const auto body = text.substr(0, text.size() - suffix.size());
    const auto plus = body.find('+', 1);
    if (plus == std::string_view::npos)
      throw ParseError("expected a+b*sqrt5, got '" + std::string(text) + "'");
    return {Rational::parse(body.substr(0, plus)),
            Rational::parse(body.substr(plus + 1))};
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) {
    return os << x.to_string();
  }

 private:
  Rational a_;
  Rational b_;
};

inline QuadraticNumber abs(const QuadraticNumber& x) {
  return sign(x) < 0 ? -x : x;
}

}  // namespace fibrect
