#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ricochet/linear_algebra.hpp"
#include "ricochet/pascal.hpp"
#include "ricochet/ratfunc.hpp"

namespace ricochet {

/// ff(s) = (s - 1)/(s + 1), of order four.
template <Field K>
Mobius<K> ff_map() {
  return Mobius<K>(K(Rational(1)), K(Rational(-1)), K(Rational(1)), K(Rational(1)));
}

template <Field K>
K ff(const K& t) {
  return (t - K(Rational(1))) / (t + K(Rational(1)));
}

/// The normal form (0, t, inf, 1, ff(t), -1) in letter order.
template <Field K>
Sextuple<K> sigma_sextuple(const K& t) {
  const K one(Rational(1));
  if (t.is_zero()) throw Error(Errc::degenerate_sigma, "t = 0 puts B on A");
  if ((t - one).is_zero()) throw Error(Errc::degenerate_sigma, "t = 1 puts B on D");
  if ((t + one).is_zero()) throw Error(Errc::degenerate_sigma, "t = -1 puts B on F");
  if ((t * t + one).is_zero()) throw Error(Errc::degenerate_sigma, "t^2 = -1 puts B on E");
  using P = ConicPoint<K>;
  return {P::at(K(Rational(0))), P::at(t), P::infinity(), P::at(one), P::at(ff(t)), P::at(K(Rational(-1)))};
}

template <Field K>
std::array<ConicPoint<K>, 3> standard_frame() {
  return {ConicPoint<K>::at(K(Rational(0))), ConicPoint<K>::infinity(), ConicPoint<K>::at(K(Rational(1)))};
}

template <Field K>
struct LetterWitness {
  Mobius<K> witness;  ///< sends the labelled points to sigma_sextuple(t)
  K t;
};

/// Tests whether points labelled A..F in order sit in the normal form: the map
/// taking A, C, D to 0, inf, 1 must send F to -1 and E to ff of the image of B.
template <Field K>
std::optional<LetterWitness<K>> check_alignment(const Sextuple<K>& h) {
  if (first_collision<K>(h).first >= 0) return std::nullopt;
  const Mobius<K> mu = mobius_through<K>({h[A], h[C], h[D]}, standard_frame<K>());
  if (!(mu(h[F]) == ConicPoint<K>::at(K(Rational(-1))))) return std::nullopt;
  const ConicPoint<K> tb = mu(h[B]);
  if (!(mu(h[E]) == ff_map<K>()(tb))) return std::nullopt;
  return LetterWitness<K>{mu, tb.value()};
}

template <Field K>
struct Alignment {
  std::array<int, 6> indices;  ///< letter -> index into the input points
  Mobius<K> witness;
  K t;
};

/// All labellings of six points that are alignments, in permutation order.
template <Field K>
std::vector<Alignment<K>> alignment_search(std::span<const ConicPoint<K>> pts) {
  if (pts.size() != 6) throw Error(Errc::invalid_sextuple, "alignment search needs six points");
  if (auto [i, j] = first_collision(pts); i >= 0)
    throw Error(Errc::invalid_sextuple, "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  std::vector<Alignment<K>> out;
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  do {
    Sextuple<K> h;
    for (std::size_t k = 0; k < 6; ++k) h[k] = pts[static_cast<std::size_t>(perm[k])];
    if (auto w = check_alignment(h)) out.push_back({perm, std::move(w->witness), std::move(w->t)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <Field K>
std::vector<Alignment<K>> alignment_search(const Sextuple<K>& pts) {
  return alignment_search(std::span<const ConicPoint<K>>(pts));
}

/// Theta = x1 x2 (x1 - x2)(x1 + x2).
template <Ring R>
BinaryForm<R> theta_form() {
  return BinaryForm<R>(std::vector<R>{R(Rational(0)), R(Rational(1)), R(Rational(0)), R(Rational(-1)), R(Rational(0))});
}

/// Delta_t = (x1 - t x2)(x1 - ff(t) x2).
inline BinaryForm<RatFunc> delta_form() {
  const RatFunc t = RatFunc::t();
  return BinaryForm<RatFunc>::linear(RatFunc(1), -t) * BinaryForm<RatFunc>::linear(RatFunc(1), -ff(t));
}

/// G_t = Theta Delta_t, the sextic of the normal form.
inline BinaryForm<RatFunc> g_t() { return theta_form<RatFunc>() * delta_form(); }

template <Ring R>
struct PairInvariants {
  R theta20, theta30, delta02, beta12, beta22, beta33;
};

/// Joint invariants of a quartic and a quadratic.
template <Ring R>
PairInvariants<R> pair_invariants(const BinaryForm<R>& quartic, const BinaryForm<R>& quadratic) {
  require_degree(quartic, 4, "pair invariants quartic");
  require_degree(quadratic, 2, "pair invariants quadratic");
  const BinaryForm<R> h = transvectant(quartic, quartic, 2);
  const BinaryForm<R> t = transvectant(quartic, h, 1);
  const BinaryForm<R> d2 = quadratic * quadratic;
  return {invariant_value(transvectant(quartic, quartic, 4)),
          invariant_value(transvectant(quartic, h, 4)),
          invariant_value(transvectant(quadratic, quadratic, 2)),
          invariant_value(transvectant(quartic, d2, 4)),
          invariant_value(transvectant(h, d2, 4)),
          invariant_value(transvectant(t, d2 * quadratic, 6))};
}

enum class I6Recipe { standard, alternative };

/// Invariants of a binary sextic f, with i = (f, f)_4 and l = (f, i)_4:
/// I2 = (f, f)_6, I4 = (i, i)_4, I6 = (l, l)_2, I10 = (f, l^3)_6.
/// The alternative degree-6 choice is (i, (i, i)_2)_4.
template <Ring R>
struct SexticInvariants {
  R i2, i4, i6, i10;

  static constexpr const char* recipe_i2 = "(f,f)_6";
  static constexpr const char* recipe_i4 = "(i,i)_4, i=(f,f)_4";
  static constexpr const char* recipe_i6 = "(l,l)_2, l=(f,i)_4";
  static constexpr const char* recipe_i6_alternative = "(i,(i,i)_2)_4";
  static constexpr const char* recipe_i10 = "(f,l^3)_6";
};

template <Ring R>
SexticInvariants<R> sextic_invariants(const BinaryForm<R>& f, I6Recipe recipe = I6Recipe::standard, bool with_i10 = true) {
  require_degree(f, 6, "sextic invariants");
  const BinaryForm<R> i = transvectant(f, f, 4);
  SexticInvariants<R> out;
  out.i2 = invariant_value(transvectant(f, f, 6));
  out.i4 = invariant_value(transvectant(i, i, 4));
  if (recipe == I6Recipe::standard || with_i10) {
    const BinaryForm<R> l = transvectant(f, i, 4);
    out.i6 = invariant_value(transvectant(l, l, 2));
    if (with_i10) out.i10 = invariant_value(transvectant(f, pow(l, 3), 6));
  }
  if (recipe == I6Recipe::alternative) out.i6 = invariant_value(transvectant(i, transvectant(i, i, 2), 4));
  return out;
}

/// I2^e2 I4^e4 I6^e6 I10^e10.
struct InvariantMonomial {
  unsigned e2, e4, e6, e10;

  std::string name() const {
    std::string s;
    auto part = [&](unsigned e, const char* base) {
      if (e == 0) return;
      if (!s.empty()) s += '*';
      s += base;
      if (e > 1) s += '^' + std::to_string(e);
    };
    part(e2, "I2");
    part(e4, "I4");
    part(e6, "I6");
    part(e10, "I10");
    return s.empty() ? "1" : s;
  }

  template <Ring R>
  R value(const SexticInvariants<R>& inv) const {
    return power(inv.i2, e2) * power(inv.i4, e4) * power(inv.i6, e6) * power(inv.i10, e10);
  }
};

/// Products of I2, I4, I6, I10 of the given degree; the I10 exponent varies
/// slowest, then I6, then I4. Degree 6 gives I2^3, I2 I4, I6.
inline std::vector<InvariantMonomial> invariant_basis(unsigned degree) {
  std::vector<InvariantMonomial> out;
  for (unsigned e10 = 0; 10 * e10 <= degree; ++e10)
    for (unsigned e6 = 0; 10 * e10 + 6 * e6 <= degree; ++e6)
      for (unsigned e4 = 0; 10 * e10 + 6 * e6 + 4 * e4 <= degree; ++e4) {
        const unsigned rest = degree - 10 * e10 - 6 * e6 - 4 * e4;
        if (rest % 2 == 0) out.push_back({rest / 2, e4, e6, e10});
      }
  return out;
}

template <Ring R>
R evaluate_relation(const IntVector& coeffs, unsigned degree, const SexticInvariants<R>& inv) {
  const auto basis = invariant_basis(degree);
  if (basis.size() != coeffs.size()) throw Error(Errc::degree_mismatch, "relation length does not match its degree");
  R acc(Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) acc = acc + R(Rational(coeffs[k])) * basis[k].value(inv);
  return acc;
}

inline std::string relation_to_string(const IntVector& coeffs, unsigned degree) {
  const auto basis = invariant_basis(degree);
  std::string s;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const bool neg = coeffs[k] < 0;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const Integer mag = abs(coeffs[k]);
    if (mag != 1) s += mag.get_str() + "*";
    s += basis[k].name();
  }
  return s.empty() ? "0" : s;
}

/// Invariants of G_t over Q(t).
inline const SexticInvariants<RatFunc>& g_t_invariants(I6Recipe recipe = I6Recipe::standard) {
  static const SexticInvariants<RatFunc> standard = sextic_invariants(g_t());
  static const SexticInvariants<RatFunc> alternative = [] {
    SexticInvariants<RatFunc> inv = standard;
    const BinaryForm<RatFunc> i = transvectant(g_t(), g_t(), 4);
    inv.i6 = invariant_value(transvectant(i, transvectant(i, i, 2), 4));
    return inv;
  }();
  return recipe == I6Recipe::standard ? standard : alternative;
}

/// Integer kernel of the linear relations among the degree-d basis
/// restricted to G_t: denominators are cleared and coefficients of t matched.
inline IntMatrix relations_on_g_t(unsigned degree, I6Recipe recipe = I6Recipe::standard) {
  const auto basis = invariant_basis(degree);
  const auto& inv = g_t_invariants(recipe);
  std::vector<RatFunc> values;
  for (const auto& m : basis) values.push_back(m.value(inv));
  UPoly common(std::vector<Rational>{Rational(1)});
  for (const auto& v : values) common = common * (v.denominator() / gcd(common, v.denominator()));
  std::vector<UPoly> cleared;
  int top = 0;
  for (const auto& v : values) {
    cleared.push_back(v.numerator() * (common / v.denominator()));
    top = std::max(top, cleared.back().degree());
  }
  IntMatrix rows;
  for (int k = 0; k <= top; ++k) {
    std::vector<Rational> row;
    for (const auto& p : cleared) row.push_back(p.coeff(k));
    IntVector scaled = primitive(row);
    if (std::any_of(scaled.begin(), scaled.end(), [](const Integer& x) { return x != 0; })) rows.push_back(std::move(scaled));
  }
  return integer_kernel(std::move(rows), basis.size());
}

/// The unique degree-6 relation on G_t over (I2^3, I2 I4, I6).
inline IntVector derive_u6(I6Recipe recipe = I6Recipe::standard) {
  IntMatrix kernel = relations_on_g_t(6, recipe);
  if (kernel.size() != 1)
    throw Error(Errc::derivation_failure, "degree-6 relation space has dimension " + std::to_string(kernel.size()));
  return kernel.front();
}

/// Degree-10 relation over (I2^5, I2^3 I4, I2 I4^2, I2^2 I6, I4 I6, I10) that is
/// not a multiple of U6: the kernel element with zero I2^5 and I2^3 I4 terms.
inline IntVector derive_u10() {
  const IntVector u6 = derive_u6();
  const IntMatrix kernel = relations_on_g_t(10);
  if (kernel.size() != 3)
    throw Error(Errc::derivation_failure, "degree-10 relation space has dimension " + std::to_string(kernel.size()));
  const IntVector u6_i2sq{u6[0], u6[1], 0, u6[2], 0, 0};
  const IntVector u6_i4{0, u6[0], u6[1], 0, u6[2], 0};
  if (!in_span(kernel, u6_i2sq) || !in_span(kernel, u6_i4))
    throw Error(Errc::derivation_failure, "multiples of U6 are missing from the degree-10 relations");
  // combinations c of the kernel basis with zero entries 0 and 1
  IntMatrix constraints{{kernel[0][0], kernel[1][0], kernel[2][0]}, {kernel[0][1], kernel[1][1], kernel[2][1]}};
  const IntMatrix combos = integer_kernel(constraints, 3);
  if (combos.size() != 1) throw Error(Errc::derivation_failure, "complement choice is not unique");
  IntVector u10(6, Integer(0));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 6; ++k) u10[k] += combos[0][j] * kernel[j][k];
  u10 = primitive(u10);
  if (rank({u6_i2sq, u6_i4, u10}, 6) != 3) throw Error(Errc::derivation_failure, "complement depends on multiples of U6");
  return u10;
}

inline const IntVector& u6_coefficients() {
  static const IntVector v = derive_u6();
  return v;
}

inline const IntVector& u10_coefficients() {
  static const IntVector v = derive_u10();
  return v;
}

template <Ring R>
R u6_value(const SexticInvariants<R>& inv) {
  return evaluate_relation(u6_coefficients(), 6, inv);
}

template <Ring R>
R u10_value(const SexticInvariants<R>& inv) {
  return evaluate_relation(u10_coefficients(), 10, inv);
}

template <Field K>
struct MembershipVerdict {
  SexticInvariants<K> invariants;
  K u6, u10;
  std::vector<Alignment<K>> alignments;
  bool vanishes;   ///< U6 = U10 = 0
  bool aligned;    ///< the alignment search found a labelling
  bool agreement;  ///< the two routes give the same answer
};

/// Decides membership both through U6, U10 and through the alignment search.
template <Field K>
MembershipVerdict<K> membership(std::span<const ConicPoint<K>> pts) {
  if (pts.size() != 6) throw Error(Errc::invalid_sextuple, "membership needs six points");
  const BinaryForm<K> phi = form_from_roots(pts);
  if (!squarefree(phi)) throw Error(Errc::invalid_sextuple, "points are not distinct");
  MembershipVerdict<K> v;
  v.invariants = sextic_invariants(phi);
  v.u6 = u6_value(v.invariants);
  v.u10 = u10_value(v.invariants);
  v.alignments = alignment_search(pts);
  v.vanishes = v.u6.is_zero() && v.u10.is_zero();
  v.aligned = !v.alignments.empty();
  v.agreement = v.vanishes == v.aligned;
  return v;
}

template <Field K>
MembershipVerdict<K> membership(const Sextuple<K>& pts) {
  return membership(std::span<const ConicPoint<K>>(pts));
}

}  // namespace ricochet
