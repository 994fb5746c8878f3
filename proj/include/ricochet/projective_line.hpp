#pragma once

#include <string>
#include <utility>

#include "ricochet/scalar.hpp"

namespace ricochet {

/// A point [p, q] of the projective line, read as the parameter p/q on the
/// conic: [a, 1] is the point phi(x1 - a x2) and [1, 0] is infinity, phi(x2).
template <Field F>
class ConicPoint {
 public:
  ConicPoint() : p_(Rational(0)), q_(Rational(1)) {}
  ConicPoint(F p, F q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.is_zero() && q_.is_zero()) throw Error(Errc::malformed_point, "projective pair [0, 0]");
  }

  /// The finite parameter `value`.
  static ConicPoint at(F value) { return ConicPoint(std::move(value), F(Rational(1))); }
  static ConicPoint infinity() { return ConicPoint(F(Rational(1)), F(Rational(0))); }

  const F& p() const { return p_; }
  const F& q() const { return q_; }
  bool is_infinity() const { return q_.is_zero(); }

  /// Affine parameter p/q; infinity has none.
  F value() const {
    if (is_infinity()) throw Error(Errc::malformed_point, "infinity has no affine parameter");
    return p_ / q_;
  }

  /// Representative [value, 1] or [1, 0].
  ConicPoint normalized() const { return is_infinity() ? infinity() : at(value()); }

  friend bool operator==(const ConicPoint& a, const ConicPoint& b) { return (a.p_ * b.q_ - a.q_ * b.p_).is_zero(); }

 private:
  F p_;
  F q_;
};

/// p1 q2 - q1 p2; vanishes exactly when the two points coincide.
template <Field F>
F bracket(const ConicPoint<F>& a, const ConicPoint<F>& b) {
  return a.p() * b.q() - a.q() * b.p();
}

template <Field F>
std::string to_string(const ConicPoint<F>& point) {
  using ricochet::to_string;
  if (point.is_infinity()) return "inf";
  return to_string(point.value());
}

}  // namespace ricochet
