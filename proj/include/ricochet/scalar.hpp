#pragma once

#include <concepts>

#include "ricochet/rational.hpp"

namespace ricochet {

/// Commutative ring with exact equality that embeds the rationals.
template <class R>
concept Ring = std::regular<R> && requires(const R a, const R b, const Rational q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  R(q);
};

template <class F>
concept Field = Ring<F> && requires(const F a, const F b) {
  { a / b } -> std::convertible_to<F>;
};

template <Ring R>
R power(R base, unsigned exponent) {
  R r(Rational(1));
  while (exponent) {
    if (exponent & 1u) r = r * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return r;
}

}  // namespace ricochet
