#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "ricochet/poly.hpp"

namespace ricochet {

using UPoly = Poly<Rational>;

/// Element of Q(t): a reduced fraction of polynomials with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
  RatFunc(int value) : RatFunc(static_cast<long>(value)) {}  // NOLINT
  RatFunc(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
  explicit RatFunc(UPoly numerator) : num_(std::move(numerator)), den_(Rational(1)) {}

  RatFunc(UPoly numerator, UPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw Error(Errc::malformed_scalar, "zero denominator in rational function");
    canonicalize();
  }

  /// The indeterminate t.
  static RatFunc t() { return RatFunc(UPoly::x()); }

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const { return num_.coeff(0); }

  /// Specializes t to `at`; throws evaluation-pole when the denominator vanishes there.
  Rational evaluate(const Rational& at) const {
    const Rational d = den_(at);
    if (d.is_zero()) throw Error(Errc::evaluation_pole, "denominator vanishes at t = " + at.to_string());
    return num_(at) / d;
  }

  RatFunc inverse() const {
    if (is_zero()) throw Error(Errc::divide_by_zero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
      RatFunc r;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const {
    if (den_.degree() == 0) return ricochet::to_string(num_);
    return "(" + ricochet::to_string(num_) + ")/(" + ricochet::to_string(den_) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = UPoly(Rational(1));
      return;
    }
    if (den_.degree() > 0) {
      const UPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
      const Rational inv = lead.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  UPoly num_;
  UPoly den_;
};

inline std::string to_string(const RatFunc& f) { return f.to_string(); }

}  // namespace ricochet
