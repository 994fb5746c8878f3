#pragma once

#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "ricochet/rational.hpp"

namespace ricochet {

/// a + b*sqrt(d) with d a squarefree integer other than 0 and 1.
///
/// Values with b = 0 carry the label d = 0 and mix freely with every
/// extension; two irrational values must share d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long value) : a_(value) {}  // NOLINT
  QuadExt(int value) : a_(value) {}  // NOLINT
  QuadExt(const Rational& value) : a_(value) {}  // NOLINT

  QuadExt(Rational a, Rational b, const Integer& d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) {
      d_ = 0;
      return;
    }
    if (d_ == 0 || d_ == 1 || squarefree_part(d_) != d_)
      throw Error(Errc::malformed_scalar, "extension label must be squarefree and not 0 or 1, got " + d_.get_str());
  }

  /// Exact square root of a rational, landing in the extension with the
  /// squarefree label when the radicand is not a rational square.
  static QuadExt sqrt(const Rational& radicand) {
    if (radicand.is_zero()) return {};
    // sqrt(p/q) = sqrt(p*q)/q
    const Integer pq = radicand.num() * radicand.den();
    const Integer core = squarefree_part(pq);
    Integer k2 = pq / core;
    Integer k;
    mpz_sqrt(k.get_mpz_t(), k2.get_mpz_t());
    const Rational coeff(k, radicand.den());
    if (core == 1) return QuadExt(coeff);
    return QuadExt(Rational(0), coeff, core);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conjugate() const { return make(a_, -b_, d_); }
  /// a^2 - d b^2
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadExt inverse() const {
    if (is_zero()) throw Error(Errc::divide_by_zero, "inverse of zero in quadratic extension");
    const Rational n = norm();
    return make(a_ / n, -b_ / n, d_);
  }

  /// Real value; only meaningful when d > 0 or b = 0.
  std::optional<double> real_value() const {
    if (b_.is_zero()) return a_.to_double();
    if (d_ < 0) return std::nullopt;
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return make(x.a_ + y.a_, x.b_ + y.b_, common(x, y)); }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return make(x.a_ - y.a_, x.b_ - y.b_, common(x, y)); }
  friend QuadExt operator-(const QuadExt& x) { return make(-x.a_, -x.b_, x.d_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Integer d = common(x, y);
    return make(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    common(x, y);
    return x * y.inverse();
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  /// Lexicographic on (a, b, d); a total order for deduplication keys, not a field order.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    if (auto c = x.b_ <=> y.b_; c != 0) return c;
    const int c = cmp(x.d_, y.d_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out = a_.is_zero() ? "" : a_.to_string();
    const bool negative = b_.sign() < 0;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    const Rational mag = b_.abs();
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "sqrt(" + d_.get_str() + ")";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

 private:
  static QuadExt make(Rational a, Rational b, const Integer& d) {
    QuadExt r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.d_ = r.b_.is_zero() ? Integer(0) : d;
    return r;
  }

  static Integer common(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw Error(Errc::domain_mismatch, "sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ") do not share a field");
  }

  Rational a_;
  Rational b_;
  Integer d_ = 0;
};

inline std::string to_string(const QuadExt& x) { return x.to_string(); }

}  // namespace ricochet
