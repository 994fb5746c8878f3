#pragma once

#include <array>
#include <string>
#include <utility>

#include "ricochet/binary_form.hpp"

namespace ricochet {

/// Point of P(S2): a nonzero quadratic form a0 x1^2 + a1 x1 x2 + a2 x2^2 up to scale.
/// The conic is a1^2 = 4 a0 a2, the image of the Veronese map.
template <Field F>
class PlanePoint {
 public:
  PlanePoint() : form_(std::vector<F>{F(Rational(1)), F(Rational(0)), F(Rational(0))}) {}
  explicit PlanePoint(BinaryForm<F> form) : form_(std::move(form)) {
    require_degree(form_, 2, "plane point");
    if (form_.is_zero()) throw Error(Errc::malformed_point, "zero quadratic form is not a plane point");
  }
  PlanePoint(F a0, F a1, F a2) : PlanePoint(BinaryForm<F>(std::vector<F>{std::move(a0), std::move(a1), std::move(a2)})) {}

  const BinaryForm<F>& form() const { return form_; }
  const F& operator[](int k) const { return form_[k]; }

  bool on_conic() const { return (form_[1] * form_[1] - F(Rational(4)) * form_[0] * form_[2]).is_zero(); }

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return proportional(a.form_, b.form_); }

 private:
  BinaryForm<F> form_;
};

/// A line stored by its pole with respect to the conic. The tangent at a
/// conic point has that point as pole.
template <Field F>
class LineByPole {
 public:
  LineByPole() = default;
  explicit LineByPole(PlanePoint<F> pole) : pole_(std::move(pole)) {}

  const PlanePoint<F>& pole() const { return pole_; }

  friend bool operator==(const LineByPole& a, const LineByPole& b) { return a.pole_ == b.pole_; }

 private:
  PlanePoint<F> pole_;
};

/// Fractional linear map s -> (a s + b)/(c s + d) of the conic parameter,
/// stored up to scale.
template <Field F>
class Mobius {
 public:
  Mobius() : Mobius(F(Rational(1)), F(Rational(0)), F(Rational(0)), F(Rational(1))) {}
  Mobius(F a, F b, F c, F d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (det().is_zero()) throw Error(Errc::singular_map, "Mobius matrix has zero determinant");
  }

  static Mobius identity() { return Mobius(); }

  const F& a() const { return m_[0]; }
  const F& b() const { return m_[1]; }
  const F& c() const { return m_[2]; }
  const F& d() const { return m_[3]; }
  F det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  ConicPoint<F> operator()(const ConicPoint<F>& s) const {
    return ConicPoint<F>(a() * s.p() + b() * s.q(), c() * s.p() + d() * s.q());
  }
  ConicPoint<F> operator()(const F& s) const { return (*this)(ConicPoint<F>::at(s)); }

  /// Inverse via the adjugate (projectively equal to the matrix inverse).
  Mobius inverse() const { return Mobius(d(), -b(), -c(), a()); }

  /// Composition: (M * N)(s) = M(N(s)).
  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return Mobius(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(), m.c() * n.a() + m.d() * n.c(),
                  m.c() * n.b() + m.d() * n.d());
  }

  friend bool operator==(const Mobius& x, const Mobius& y) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (!(x.m_[i] * y.m_[j] - x.m_[j] * y.m_[i]).is_zero()) return false;
    // proportional with a nonzero factor: both determinants are nonzero
    return true;
  }

  bool is_involution() const {
    const Mobius sq = (*this) * (*this);
    return sq == identity();
  }

 private:
  std::array<F, 4> m_;
};

template <Field F>
ConicPoint<F> param(long value) {
  return ConicPoint<F>::at(F(Rational(value)));
}

/// phi(T): the square of the linear form of T.
template <Field F>
PlanePoint<F> veronese(const ConicPoint<F>& t) {
  const BinaryForm<F> l = linear_form(t);
  return PlanePoint<F>(l * l);
}

/// Parameter of a plane point that lies on the conic.
template <Field F>
ConicPoint<F> conic_parameter(const PlanePoint<F>& point) {
  if (!point.on_conic()) throw Error(Errc::malformed_point, "plane point is not on the conic");
  // (q x1 - p x2)^2 = q^2 x1^2 - 2pq x1 x2 + p^2 x2^2
  if (point[0].is_zero()) return ConicPoint<F>::infinity();
  return ConicPoint<F>(-point[1], F(Rational(2)) * point[0]);
}

template <Field F>
LineByPole<F> tangent(const ConicPoint<F>& t) {
  return LineByPole<F>(veronese(t));
}

/// The polar line of Q.
template <Field F>
LineByPole<F> polar(const PlanePoint<F>& q) {
  return LineByPole<F>(q);
}

/// Line through two distinct plane points; its pole is (P1, P2)_1.
template <Field F>
LineByPole<F> join(const PlanePoint<F>& p1, const PlanePoint<F>& p2) {
  BinaryForm<F> pole = transvectant(p1.form(), p2.form(), 1);
  if (pole.is_zero()) throw Error(Errc::degenerate_join, "join of coincident points");
  return LineByPole<F>(PlanePoint<F>(std::move(pole)));
}

/// Intersection of two distinct lines, (pole1, pole2)_1.
template <Field F>
PlanePoint<F> meet(const LineByPole<F>& l1, const LineByPole<F>& l2) {
  BinaryForm<F> point = transvectant(l1.pole().form(), l2.pole().form(), 1);
  if (point.is_zero()) throw Error(Errc::degenerate_meet, "meet of coincident lines");
  return PlanePoint<F>(std::move(point));
}

/// Incidence through the polarity pairing (P, pole)_2 = 0.
template <Field F>
bool incident(const PlanePoint<F>& point, const LineByPole<F>& line) {
  return invariant_value(transvectant(point.form(), line.pole().form(), 2)).is_zero();
}

template <Field F>
bool collinear(const PlanePoint<F>& a, const PlanePoint<F>& b, const PlanePoint<F>& c) {
  if (a == b || a == c || b == c) return true;
  return incident(c, join(a, b));
}

/// Chord through two conic points; the tangent when they coincide.
template <Field F>
LineByPole<F> chord(const ConicPoint<F>& s, const ConicPoint<F>& t) {
  if (s == t) return tangent(s);
  return join(veronese(s), veronese(t));
}

/// <a, b, c, d> = ((a-c)(b-d)) / ((a-d)(b-c)), so <0, inf, 1, -1> = -1.
template <Field F>
F cross_ratio(const ConicPoint<F>& a, const ConicPoint<F>& b, const ConicPoint<F>& c, const ConicPoint<F>& d) {
  const std::array<ConicPoint<F>, 4> pts{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) throw Error(Errc::degenerate_cross_ratio, "repeated point in cross-ratio");
  return (bracket(a, c) * bracket(b, d)) / (bracket(a, d) * bracket(b, c));
}

namespace detail {

/// Mobius sending p1, p2, p3 to 0, inf, 1.
template <Field F>
Mobius<F> to_standard_frame(const ConicPoint<F>& p1, const ConicPoint<F>& p2, const ConicPoint<F>& p3) {
  const F l1 = bracket(p3, p2);
  const F l2 = bracket(p3, p1);
  return Mobius<F>(l1 * p1.q(), -(l1 * p1.p()), l2 * p2.q(), -(l2 * p2.p()));
}

template <Field F>
bool distinct3(const ConicPoint<F>& a, const ConicPoint<F>& b, const ConicPoint<F>& c) {
  return !(a == b) && !(a == c) && !(b == c);
}

}  // namespace detail

/// The unique Mobius map with p_i -> q_i.
template <Field F>
Mobius<F> mobius_through(const std::array<ConicPoint<F>, 3>& from, const std::array<ConicPoint<F>, 3>& to) {
  if (!detail::distinct3(from[0], from[1], from[2])) throw Error(Errc::no_unique_map, "repeated source point");
  if (!detail::distinct3(to[0], to[1], to[2])) throw Error(Errc::no_unique_map, "repeated target point");
  const Mobius<F> src = detail::to_standard_frame(from[0], from[1], from[2]);
  const Mobius<F> dst = detail::to_standard_frame(to[0], to[1], to[2]);
  return dst.inverse() * src;
}

/// sigma_Q: T -> second intersection of QT with the conic, as a map of parameters.
/// For Q = a0 x1^2 + a1 x1 x2 + a2 x2^2 this is s -> (-a1 s - 2 a2)/(2 a0 s + a1);
/// its fixed points are the roots of Q, where QT is tangent.
template <Field F>
Mobius<F> involution_from_point(const PlanePoint<F>& q) {
  if (q.on_conic()) throw Error(Errc::degenerate_involution, "centre of the involution lies on the conic");
  const F two(Rational(2));
  return Mobius<F>(-q[1], -(two * q[2]), two * q[0], q[1]);
}

/// Action of a Mobius map on the whole plane through the symmetric square:
/// veronese(T) -> veronese(M(T)).
template <Field F>
PlanePoint<F> mobius_on_plane(const Mobius<F>& m, const PlanePoint<F>& point) {
  // q x1 - p x2 must go to the linear form of M[p, q]; that is the adjugate substitution.
  return PlanePoint<F>(substitute(point.form(), m.d(), -m.b(), -m.c(), m.a()));
}

template <Field F>
LineByPole<F> mobius_on_line(const Mobius<F>& m, const LineByPole<F>& line) {
  return LineByPole<F>(mobius_on_plane(m, line.pole()));
}

/// Other intersection of line QT with the conic.
template <Field F>
ConicPoint<F> second_intersection(const PlanePoint<F>& q, const ConicPoint<F>& t) {
  return involution_from_point(q)(t);
}

/// Other intersection with the conic of the line through the conic point T and
/// an arbitrary plane point H. H on the conic is its own answer; H = T gives T.
template <Field F>
ConicPoint<F> other_intersection(const ConicPoint<F>& t, const PlanePoint<F>& h) {
  if (h.on_conic()) return conic_parameter(h);
  return second_intersection(h, t);
}

template <Field F>
std::string to_string(const PlanePoint<F>& p) {
  return to_string(p.form());
}

}  // namespace ricochet
