#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "coverforge/ring/scalar.hpp"

namespace coverforge {

/// Commutative ring with the library's free-function protocol.
template <class R>
concept CommutativeRing = std::copy_constructible<R> && requires(const R& a,
                                                                 const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<R>;
  { one_like(a) } -> std::convertible_to<R>;
  { from_integer(a, Integer{}) } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// Ring that can answer unit / inverse queries.
template <class R>
concept InvertibleQuery = CommutativeRing<R> && requires(const R& a) {
  { try_inverse(a) } -> std::convertible_to<std::optional<R>>;
};

/// Ring with exact division queries.
template <class R>
concept DivisionQuery = CommutativeRing<R> && requires(const R& a) {
  { divides(a, a) } -> std::convertible_to<std::optional<R>>;
};

/// Euclidean domain: the rings Smith normal form runs over.
template <class R>
concept EuclideanDomain = CommutativeRing<R> && requires(const R& a) {
  euclid_norm(a);
  { divmod(a, a) } -> std::convertible_to<std::pair<R, R>>;
  { unit_normal(a) } -> std::convertible_to<R>;
};

template <CommutativeRing R>
R pow(const R& base, unsigned long exponent) {
  R result = one_like(base);
  R b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace coverforge
