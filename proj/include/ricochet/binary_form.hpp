#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ricochet/poly.hpp"
#include "ricochet/projective_line.hpp"

namespace ricochet {

/// Binary form sum_k c_k x1^(m-k) x2^k of degree m over a ring.
///
/// The zero form of any degree is representable; operations that need a
/// nonzero input reject it.
template <Ring R>
class BinaryForm {
 public:
  BinaryForm() : c_{R(Rational(0))} {}
  explicit BinaryForm(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(Errc::degree_mismatch, "binary form needs at least one coefficient");
  }

  static BinaryForm zero(int degree) { return BinaryForm(std::vector<R>(static_cast<std::size_t>(degree + 1), R(Rational(0)))); }
  /// The linear form a x1 + b x2.
  static BinaryForm linear(R a, R b) { return BinaryForm(std::vector<R>{std::move(a), std::move(b)}); }
  static BinaryForm constant(R value) { return BinaryForm(std::vector<R>{std::move(value)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<R>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& a : c_)
      if (!a.is_zero()) return false;
    return true;
  }

  /// Partial derivative d^i/dx1^i d^j/dx2^j.
  BinaryForm partial(int i, int j) const {
    const int m = degree();
    if (i + j > m) return BinaryForm::zero(0);
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(m - i - j + 1));
    for (int k = j; k <= m - i; ++k) {
      const Integer mult = falling_factorial(m - k, i) * falling_factorial(k, j);
      out.push_back(c_[static_cast<std::size_t>(k)] * R(Rational(mult)));
    }
    return BinaryForm(std::move(out));
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    require_same_degree(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    return *this;
  }

  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator-(BinaryForm a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend BinaryForm operator*(const R& s, BinaryForm a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return BinaryForm(std::move(r));
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

 private:
  void require_same_degree(const BinaryForm& o) const {
    if (o.degree() != degree())
      throw Error(Errc::degree_mismatch, "adding forms of degree " + std::to_string(degree()) + " and " + std::to_string(o.degree()));
  }

  std::vector<R> c_;
};

template <Ring R>
BinaryForm<R> pow(const BinaryForm<R>& f, unsigned exponent) {
  BinaryForm<R> r = BinaryForm<R>::constant(R(Rational(1)));
  for (unsigned i = 0; i < exponent; ++i) r = r * f;
  return r;
}

/// Projective equality: same degree, both nonzero, coefficient vectors proportional.
template <Ring R>
bool proportional(const BinaryForm<R>& a, const BinaryForm<R>& b) {
  if (a.degree() != b.degree() || a.is_zero() || b.is_zero()) return false;
  const int m = a.degree();
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

/// r-th transvectant with the factorial normalization
///   (m-r)!(n-r)!/(m!n!) * sum_k (-1)^k C(r,k) d^rA/dx1^(r-k)dx2^k * d^rB/dx1^k dx2^(r-k).
/// (x1^2, x2^2)_1 = x1 x2 and (Theta, Theta)_4 = 1/2 for Theta = x1 x2 (x1^2 - x2^2).
template <Ring R>
BinaryForm<R> transvectant(const BinaryForm<R>& a, const BinaryForm<R>& b, int r) {
  const int m = a.degree();
  const int n = b.degree();
  if (r < 0 || r > m || r > n)
    throw Error(Errc::transvectant_range,
                "order " + std::to_string(r) + " for degrees " + std::to_string(m) + ", " + std::to_string(n));
  const int out_degree = m + n - 2 * r;
  std::vector<R> acc(static_cast<std::size_t>(out_degree + 1), R(Rational(0)));
  for (int k = 0; k <= r; ++k) {
    const BinaryForm<R> da = a.partial(r - k, k);
    const BinaryForm<R> db = b.partial(k, r - k);
    Integer weight = binomial(static_cast<unsigned>(r), static_cast<unsigned>(k));
    if (k % 2 == 1) weight = -weight;
    const R w{Rational(weight)};
    for (int i = 0; i <= da.degree(); ++i) {
      if (da[i].is_zero()) continue;
      const R lhs = w * da[i];
      for (int j = 0; j <= db.degree(); ++j) {
        if (db[j].is_zero()) continue;
        auto& slot = acc[static_cast<std::size_t>(i + j)];
        slot = slot + lhs * db[j];
      }
    }
  }
  const R norm{Rational(factorial(static_cast<unsigned>(m - r)) * factorial(static_cast<unsigned>(n - r)),
                        factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n)))};
  for (auto& x : acc) x = norm * x;
  return BinaryForm<R>(std::move(acc));
}

/// Scalar value of an order-0 transvectant.
template <Ring R>
R invariant_value(const BinaryForm<R>& f) {
  if (f.degree() != 0) throw Error(Errc::degree_mismatch, "expected an invariant (order 0), got order " + std::to_string(f.degree()));
  return f[0];
}

template <Ring R>
void require_degree(const BinaryForm<R>& f, int degree, const char* what) {
  if (f.degree() != degree)
    throw Error(Errc::degree_mismatch, std::string(what) + " needs degree " + std::to_string(degree) + ", got " + std::to_string(f.degree()));
}

/// He(Phi) = (Phi, Phi)_2 for a binary quartic.
template <Ring R>
BinaryForm<R> hessian(const BinaryForm<R>& quartic) {
  require_degree(quartic, 4, "hessian");
  if (quartic.is_zero()) throw Error(Errc::zero_form, "hessian of the zero quartic");
  return transvectant(quartic, quartic, 2);
}

template <Ring R>
struct QuarticInvariants {
  R j2;  ///< (Phi, Phi)_4
  R j3;  ///< (Phi, (Phi, Phi)_2)_4; vanishes iff the roots are harmonic
};

template <Ring R>
QuarticInvariants<R> quartic_invariants(const BinaryForm<R>& quartic) {
  const BinaryForm<R> he = hessian(quartic);
  return {invariant_value(transvectant(quartic, quartic, 4)), invariant_value(transvectant(quartic, he, 4))};
}

/// Linear factor q x1 - p x2 vanishing at the parameter [p, q].
template <Field F>
BinaryForm<F> linear_form(const ConicPoint<F>& point) {
  return BinaryForm<F>::linear(point.q(), -point.p());
}

/// Product of the linear factors of the given parameters.
template <Field F>
BinaryForm<F> form_from_roots(std::span<const ConicPoint<F>> params) {
  if (params.empty()) throw Error(Errc::malformed_point, "form_from_roots needs at least one point");
  BinaryForm<F> f = linear_form(params.front());
  for (std::size_t i = 1; i < params.size(); ++i) f = f * linear_form(params[i]);
  return f;
}

template <Field F>
BinaryForm<F> form_from_roots(const std::vector<ConicPoint<F>>& params) {
  return form_from_roots(std::span<const ConicPoint<F>>(params));
}

/// f(x1 -> s11 x1 + s12 x2, x2 -> s21 x1 + s22 x2).
template <Ring R>
BinaryForm<R> substitute(const BinaryForm<R>& f, const R& s11, const R& s12, const R& s21, const R& s22) {
  const int m = f.degree();
  const BinaryForm<R> l1 = BinaryForm<R>::linear(s11, s12);
  const BinaryForm<R> l2 = BinaryForm<R>::linear(s21, s22);
  std::vector<BinaryForm<R>> p1{BinaryForm<R>::constant(R(Rational(1)))};
  std::vector<BinaryForm<R>> p2{BinaryForm<R>::constant(R(Rational(1)))};
  for (int k = 1; k <= m; ++k) {
    p1.push_back(p1.back() * l1);
    p2.push_back(p2.back() * l2);
  }
  BinaryForm<R> out = BinaryForm<R>::zero(m);
  for (int k = 0; k <= m; ++k) {
    if (f[k].is_zero()) continue;
    out += f[k] * (p1[static_cast<std::size_t>(m - k)] * p2[static_cast<std::size_t>(k)]);
  }
  return out;
}

/// True iff f has no repeated linear factor over the algebraic closure.
/// Dehomogenizes at x2 = 1; the multiplicity of the root at infinity is the degree drop.
template <Field F>
bool squarefree(const BinaryForm<F>& f) {
  if (f.is_zero()) throw Error(Errc::zero_form, "squarefree test of the zero form");
  const int m = f.degree();
  std::vector<F> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j) coeffs.push_back(f[m - j]);
  const Poly<F> g(std::move(coeffs));
  if (m - g.degree() > 1) return false;
  if (g.degree() <= 1) return true;
  return gcd(g, g.derivative()).degree() == 0;
}

template <Ring R>
std::string to_string(const BinaryForm<R>& f) {
  using ricochet::to_string;
  std::string out = "[";
  for (int k = 0; k <= f.degree(); ++k) {
    if (k) out += ", ";
    out += to_string(f[k]);
  }
  return out + "]";
}

}  // namespace ricochet
