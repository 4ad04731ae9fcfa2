#pragma once

#include <concepts>
#include <type_traits>

#include "fibrect/quadratic.hpp"
#include "fibrect/rational.hpp"

namespace fibrect {

/// A scalar with exact field arithmetic and an exact sign test. Rational and
/// QuadraticNumber are the two models.
template <class T>
concept ExactScalar = std::regular<T> && std::totally_ordered<T> &&
    requires(const T& x, const T& y) {
      { x + y } -> std::same_as<T>;
      { x - y } -> std::same_as<T>;
      { x * y } -> std::same_as<T>;
      { x / y } -> std::same_as<T>;
      { sign(x) } -> std::convertible_to<int>;
      { x.to_string() } -> std::convertible_to<std::string>;
      { T::parse(std::string_view{}) } -> std::same_as<T>;
    };

static_assert(ExactScalar<Rational>);
static_assert(ExactScalar<QuadraticNumber>);

template <class T>
inline constexpr bool is_quadratic_v = std::is_same_v<T, QuadraticNumber>;

}  // namespace fibrect
