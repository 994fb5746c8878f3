#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ricochet/scalar.hpp"

namespace ricochet {

/// Dense univariate polynomial over a field, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
template <Field F>
class Poly {
 public:
  Poly() = default;
  Poly(F constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The polynomial x.
  static Poly x() { return Poly(std::vector<F>{F(Rational(0)), F(Rational(1))}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coefficients() const { return c_; }

  F coeff(int k) const {
    if (k < 0 || k > degree()) return F(Rational(0));
    return c_[static_cast<std::size_t>(k)];
  }
  F leading() const { return is_zero() ? F(Rational(0)) : c_.back(); }

  Poly monic() const {
    if (is_zero()) return *this;
    const F inv = F(Rational(1)) / leading();
    Poly r = *this;
    for (auto& a : r.c_) a = a * inv;
    return r;
  }

  F operator()(const F& at) const {
    F acc(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(Rational(static_cast<long>(k))));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(Rational(0)));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const F& s) {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }

  /// Euclidean division: returns {quotient, remainder}.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(Errc::divide_by_zero, "polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly{}, rem};
    std::vector<F> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), F(Rational(0)));
    const F lead_inv = F(Rational(1)) / divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
      const int shift = rem.degree() - divisor.degree();
      const F factor = rem.leading() * lead_inv;
      quot[static_cast<std::size_t>(shift)] = factor;
      for (int k = 0; k <= divisor.degree(); ++k) {
        auto& slot = rem.c_[static_cast<std::size_t>(k + shift)];
        slot = slot - factor * divisor.c_[static_cast<std::size_t>(k)];
      }
      // the leading term cancels exactly
      rem.c_.pop_back();
      rem.trim();
    }
    return {Poly(std::move(quot)), rem};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Renders a polynomial over Q in the variable `var`, highest degree first.
inline std::string to_string(const Poly<Rational>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = mag.is_one() && k > 0;
    if (!unit) out += mag.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace ricochet
