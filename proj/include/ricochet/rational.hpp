#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "ricochet/error.hpp"

namespace ricochet {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by GMP; every constructor canonicalizes so structural equality is
/// value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& value) : q_(value) {}  // NOLINT

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::malformed_scalar, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "7", "-95/31", "+3/4". Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    auto fail = [&] { return Error(Errc::malformed_scalar, "cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    const auto slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!digits_ok(num, true)) throw fail();
    if (slash != std::string_view::npos && !digits_ok(den, false)) throw fail();
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer numerator(n, 10);
    Integer denominator = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    return Rational(numerator, denominator);
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::divide_by_zero, "inverse of zero");
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
  }

  Rational abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
  }

  Rational pow(unsigned exponent) const {
    Rational r(1);
    Rational base = *this;
    while (exponent) {
      if (exponent & 1u) r *= base;
      base *= base;
      exponent >>= 1u;
    }
    return r;
  }

  double to_double() const { return q_.get_d(); }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::divide_by_zero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  std::size_t hash() const {
    return std::hash<std::string>{}(q_.get_num().get_str(16)) * 31u + std::hash<std::string>{}(q_.get_den().get_str(16));
  }

 private:
  mpq_class q_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// n!/(n-k)!
inline Integer falling_factorial(long n, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

/// Squarefree part of a nonzero integer, sign preserved: 1260 -> 35, -12 -> -3.
/// Trial division up to the cube root; the remaining cofactor has at most two
/// prime factors and is squarefree unless it is a perfect square.
inline Integer squarefree_part(const Integer& n) {
  if (n == 0) throw Error(Errc::malformed_scalar, "squarefree part of zero");
  Integer m = ::abs(n);
  Integer keep = 1;
  for (Integer p = 2; p * p * p <= m; ++p) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) keep *= p;
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t()) == 0) keep *= m;
  return n < 0 ? Integer(-keep) : keep;
}

}  // namespace ricochet

template <>
struct std::hash<ricochet::Rational> {
  std::size_t operator()(const ricochet::Rational& r) const { return r.hash(); }
};
