#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ricochet/quad_ext.hpp"
#include "ricochet/rico_algebra.hpp"

namespace ricochet {

/// A permutation of the letters A..F.
class LetterPerm {
 public:
  LetterPerm() : img_{0, 1, 2, 3, 4, 5} {}
  explicit LetterPerm(std::array<int, 6> images) : img_(images) {
    std::array<bool, 6> seen{};
    for (int x : img_) {
      if (x < 0 || x > 5 || seen[static_cast<std::size_t>(x)]) throw Error(Errc::malformed_document, "not a permutation of six letters");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  /// Cycle notation such as "(A D C F)" or "(A D)(B E)(C F)"; "e" is the identity.
  static LetterPerm parse(std::string_view text) {
    std::array<int, 6> img{0, 1, 2, 3, 4, 5};
    if (text == "e") return LetterPerm();
    std::vector<int> cycle;
    bool open = false;
    std::array<bool, 6> used{};
    for (char ch : text) {
      if (ch == ' ') continue;
      if (ch == '(') {
        if (open) throw Error(Errc::malformed_document, "nested cycle");
        open = true;
        cycle.clear();
      } else if (ch == ')') {
        if (!open) throw Error(Errc::malformed_document, "unbalanced cycle");
        open = false;
        for (std::size_t k = 0; k < cycle.size(); ++k) img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
      } else if (ch >= 'A' && ch <= 'F' && open) {
        const int letter = ch - 'A';
        if (used[static_cast<std::size_t>(letter)]) throw Error(Errc::malformed_document, "letter repeated in cycle notation");
        used[static_cast<std::size_t>(letter)] = true;
        cycle.push_back(letter);
      } else {
        throw Error(Errc::malformed_document, std::string("unexpected character in permutation: ") + ch);
      }
    }
    if (open) throw Error(Errc::malformed_document, "unterminated cycle");
    return LetterPerm(img);
  }

  int operator()(int letter) const { return img_.at(static_cast<std::size_t>(letter)); }
  const std::array<int, 6>& images() const { return img_; }

  /// (p * q)(X) = p(q(X)).
  friend LetterPerm operator*(const LetterPerm& p, const LetterPerm& q) {
    std::array<int, 6> r{};
    for (std::size_t k = 0; k < 6; ++k) r[k] = p(q(static_cast<int>(k)));
    return LetterPerm(r);
  }

  LetterPerm inverse() const {
    std::array<int, 6> r{};
    for (std::size_t k = 0; k < 6; ++k) r[static_cast<std::size_t>(img_[k])] = static_cast<int>(k);
    return LetterPerm(r);
  }

  bool is_identity() const { return *this == LetterPerm(); }

  unsigned order() const {
    unsigned n = 1;
    for (LetterPerm p = *this; !p.is_identity(); p = p * *this) ++n;
    return n;
  }

  std::string to_string() const {
    std::string s;
    std::array<bool, 6> done{};
    for (int start = 0; start < 6; ++start) {
      if (done[static_cast<std::size_t>(start)] || img_[static_cast<std::size_t>(start)] == start) continue;
      s += '(';
      for (int x = start; !done[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
        if (x != start) s += ' ';
        s += kLetterNames[static_cast<std::size_t>(x)];
        done[static_cast<std::size_t>(x)] = true;
      }
      s += ')';
    }
    return s.empty() ? "e" : s;
  }

  static std::vector<LetterPerm> all() {
    std::vector<LetterPerm> out;
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    do out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  friend bool operator==(const LetterPerm&, const LetterPerm&) = default;
  friend auto operator<=>(const LetterPerm&, const LetterPerm&) = default;

 private:
  std::array<int, 6> img_;
};

inline LetterPerm shuffle_u() { return LetterPerm::parse("(A D C F)"); }
inline LetterPerm shuffle_v() { return LetterPerm::parse("(A D)(B E)(C F)"); }

/// Whether h o z is again an alignment, h being the normal form at t. The
/// returned witness sends the relabelled points to the normal form at its t.
template <Field K>
std::optional<LetterWitness<K>> shuffle_membership(const LetterPerm& z, const K& t) {
  const Sextuple<K> h = sigma_sextuple(t);
  Sextuple<K> moved;
  for (std::size_t k = 0; k < 6; ++k) moved[k] = h[static_cast<std::size_t>(z(static_cast<int>(k)))];
  return check_alignment(moved);
}

/// Closure of a set of permutations under composition.
inline std::vector<LetterPerm> generated_group(const std::vector<LetterPerm>& gens) {
  std::set<LetterPerm> seen{LetterPerm()};
  std::vector<LetterPerm> frontier{LetterPerm()};
  while (!frontier.empty()) {
    std::vector<LetterPerm> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        const LetterPerm h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

struct ShuffleGroup {
  std::vector<LetterPerm> elements;  ///< sorted
  bool closed = false;               ///< closed under composition and inverse
  bool relations = false;            ///< u^4 = v^2 = (uv)^2 = e
  bool generated_by_uv = false;      ///< equals the group generated by u and v

  std::size_t order() const { return elements.size(); }
  bool contains(const LetterPerm& p) const { return std::binary_search(elements.begin(), elements.end(), p); }
};

/// All letter permutations preserving the alignment property of the normal form at t.
template <Field K>
ShuffleGroup shuffle_group(const K& t) {
  sigma_sextuple(t);
  ShuffleGroup g;
  for (const auto& z : LetterPerm::all())
    if (shuffle_membership(z, t)) g.elements.push_back(z);
  g.closed = true;
  for (const auto& x : g.elements) {
    g.closed = g.closed && g.contains(x.inverse());
    for (const auto& y : g.elements) g.closed = g.closed && g.contains(x * y);
  }
  const LetterPerm u = shuffle_u(), v = shuffle_v();
  g.relations = (u * u * u * u).is_identity() && (v * v).is_identity() && (u * v * u * v).is_identity();
  g.generated_by_uv = generated_group({u, v}) == g.elements;
  return g;
}

/// The harmonic letters A, C, D, F.
inline constexpr std::array<int, 4> kHarmonicLetters{A, C, D, F};

inline bool is_harmonic_letter(int letter) { return letter == A || letter == C || letter == D || letter == F; }

/// Placement of the four marked points into four of the six letters.
struct Assignment {
  std::array<int, 6> slot{-1, -1, -1, -1, -1, -1};  ///< letter -> index into Z, or -1

  int type() const {
    int n = 0;
    for (int h : kHarmonicLetters) n += slot[static_cast<std::size_t>(h)] >= 0;
    return n;
  }

  std::string to_string() const {
    std::string s;
    for (int k = 0; k < 6; ++k) {
      if (slot[static_cast<std::size_t>(k)] < 0) continue;
      if (!s.empty()) s += ", ";
      s += letter_name(k) + "->z" + std::to_string(slot[static_cast<std::size_t>(k)] + 1);
    }
    return s;
  }

  /// Relabel by a shuffle: the point at letter X moves to letter z^-1(X), so
  /// that composing an extension with z gives an extension of the result.
  Assignment relabelled(const LetterPerm& z) const {
    Assignment r;
    const LetterPerm zi = z.inverse();
    for (int k = 0; k < 6; ++k) r.slot[static_cast<std::size_t>(zi(k))] = slot[static_cast<std::size_t>(k)];
    return r;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

template <Field K>
void require_quadruple(std::span<const ConicPoint<K>> z) {
  if (z.size() != 4) throw Error(Errc::invalid_quadruple, "expected four points, got " + std::to_string(z.size()));
  if (auto [i, j] = first_collision(z); i >= 0)
    throw Error(Errc::invalid_quadruple, "points z" + std::to_string(i + 1) + " and z" + std::to_string(j + 1) + " coincide");
}

/// All 360 assignments: letter subsets in lexicographic order, then the
/// bijections onto Z in permutation order.
inline std::vector<Assignment> enumerate_assignments() {
  std::vector<Assignment> out;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          std::array<int, 4> perm{0, 1, 2, 3};
          do {
            Assignment x;
            const std::array<int, 4> letters{a, b, c, d};
            for (std::size_t k = 0; k < 4; ++k) x.slot[static_cast<std::size_t>(letters[k])] = perm[k];
            out.push_back(x);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
  return out;
}

template <Field K>
std::vector<Assignment> enumerate_assignments(std::span<const ConicPoint<K>> z) {
  require_quadruple(z);
  return enumerate_assignments();
}

/// Harmonic conjugate of p with respect to x and y: the fixed points of the
/// involution are x and y.
template <Field K>
ConicPoint<K> harmonic_conjugate(const ConicPoint<K>& p, const ConicPoint<K>& x, const ConicPoint<K>& y) {
  return involution_from_point(PlanePoint<K>(linear_form(x) * linear_form(y)))(p);
}

/// Fills in the one missing harmonic letter so that <A, C, D, F> = -1.
template <Field K>
void complete_harmonic(std::array<std::optional<ConicPoint<K>>, 6>& h) {
  if (!h[A]) h[A] = harmonic_conjugate(*h[C], *h[D], *h[F]);
  else if (!h[C]) h[C] = harmonic_conjugate(*h[A], *h[D], *h[F]);
  else if (!h[D]) h[D] = harmonic_conjugate(*h[F], *h[A], *h[C]);
  else if (!h[F]) h[F] = harmonic_conjugate(*h[D], *h[A], *h[C]);
}

template <Field K, Field L>
ConicPoint<L> lift(const ConicPoint<K>& p) {
  return ConicPoint<L>(L(p.p()), L(p.q()));
}

/// A completion of an assignment to an aligned sextuple, possibly over Q(sqrt d).
struct Extension {
  Sextuple<QuadExt> points;  ///< letter order
  Integer d = 0;             ///< 0 when all coordinates are rational
};

struct ExtendResult {
  std::vector<Extension> extensions;
  std::optional<UPoly> quadratic;  ///< type 2: integer equation for the first unknown harmonic letter
  int unknown_letter = -1;         ///< type 2: the letter that equation solves for
  std::string violation;           ///< nonempty when the quadruple is not general enough
};

namespace detail {

inline std::optional<Extension> validated(const std::array<std::optional<ConicPoint<QuadExt>>, 6>& slots) {
  Sextuple<QuadExt> pts;
  Integer d = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    pts[k] = slots[k]->normalized();
    for (const auto* x : {&pts[k].p(), &pts[k].q()})
      if (x->d() != 0) d = x->d();
  }
  if (!check_alignment(pts)) return std::nullopt;
  return Extension{pts, d};
}

inline ExtendResult extend_type3(std::array<std::optional<ConicPoint<Rational>>, 6> h) {
  using P = ConicPoint<Rational>;
  ExtendResult r;
  complete_harmonic(h);
  const Mobius<Rational> mu = mobius_through<Rational>({*h[A], *h[C], *h[D]}, standard_frame<Rational>());
  const P tb = h[B] ? mu(*h[B]) : ff_map<Rational>().inverse()(mu(*h[E]));
  if (tb.is_infinity()) {
    r.violation = "the modulus is infinite";
    return r;
  }
  Sextuple<Rational> normal;
  try {
    normal = sigma_sextuple(tb.value());
  } catch (const Error& e) {
    r.violation = e.what();
    return r;
  }
  const Mobius<Rational> back = mu.inverse();
  std::array<std::optional<ConicPoint<QuadExt>>, 6> lifted;
  for (std::size_t k = 0; k < 6; ++k) {
    const P image = back(normal[k]);
    if (h[k] && !(*h[k] == image)) {
      r.violation = "marked point " + letter_name(static_cast<int>(k)) + " moved under transport";
      return r;
    }
    lifted[k] = lift<Rational, QuadExt>(image);
  }
  if (auto ext = validated(lifted)) r.extensions.push_back(*ext);
  else r.violation = "transported sextuple is not aligned";
  return r;
}

/// Numerator of <E> - ff(<B>) with the first unknown harmonic letter at x.
inline UPoly type2_equation(const std::array<std::optional<ConicPoint<Rational>>, 6>& h, int unknown) {
  using P = ConicPoint<RatFunc>;
  std::array<std::optional<P>, 6> s;
  for (std::size_t k = 0; k < 6; ++k)
    if (h[k]) s[k] = lift<Rational, RatFunc>(*h[k]);
  s[static_cast<std::size_t>(unknown)] = P::at(RatFunc::t());
  complete_harmonic(s);
  const Mobius<RatFunc> mu = mobius_through<RatFunc>({*s[A], *s[C], *s[D]}, standard_frame<RatFunc>());
  const P te = mu(*s[E]).normalized();
  const P fb = ff_map<RatFunc>()(mu(*s[B])).normalized();
  return bracket(te, fb).numerator();
}

inline ExtendResult extend_type2(const std::array<std::optional<ConicPoint<Rational>>, 6>& h) {
  ExtendResult r;
  int unknown = -1;
  for (int letter : kHarmonicLetters)
    if (!h[static_cast<std::size_t>(letter)]) {
      unknown = letter;
      break;
    }
  r.unknown_letter = unknown;
  UPoly n;
  try {
    n = type2_equation(h, unknown);
  } catch (const Error& e) {
    r.violation = std::string("symbolic elimination failed: ") + e.what();
    return r;
  }
  if (n.is_zero()) {
    r.violation = "the equation for " + letter_name(unknown) + " vanishes identically";
    return r;
  }
  {
    std::vector<Rational> high_first(n.coefficients().rbegin(), n.coefficients().rend());
    IntVector ints = primitive(high_first);
    std::vector<Rational> low_first(ints.rbegin(), ints.rend());
    r.quadratic = UPoly(low_first);
  }
  std::vector<ConicPoint<QuadExt>> candidates;
  switch (n.degree()) {
    case 0:
      break;
    case 1:
      candidates.push_back(ConicPoint<QuadExt>::at(QuadExt(-n.coeff(0) / n.coeff(1))));
      break;
    case 2: {
      const Rational a = n.coeff(2), b = n.coeff(1), c = n.coeff(0);
      const Rational disc = b * b - Rational(4) * a * c;
      if (disc.is_zero()) {
        r.violation = "repeated root for " + letter_name(unknown);
        return r;
      }
      const QuadExt root = QuadExt::sqrt(disc);
      for (int sign : {1, -1})
        candidates.push_back(ConicPoint<QuadExt>::at((QuadExt(-b) + QuadExt(sign) * root) / QuadExt(Rational(2) * a)));
      break;
    }
    default:
      r.violation = "equation for " + letter_name(unknown) + " has degree " + std::to_string(n.degree());
      return r;
  }
  bool infinity_marked = false;
  for (const auto& p : h)
    if (p && p->is_infinity()) infinity_marked = true;
  if (!infinity_marked) candidates.push_back(ConicPoint<QuadExt>::infinity());
  for (const auto& c : candidates) {
    std::array<std::optional<ConicPoint<QuadExt>>, 6> s;
    for (std::size_t k = 0; k < 6; ++k)
      if (h[k]) s[k] = lift<Rational, QuadExt>(*h[k]);
    s[static_cast<std::size_t>(unknown)] = c;
    try {
      complete_harmonic(s);
      if (auto ext = validated(s)) r.extensions.push_back(*ext);
    } catch (const Error&) {
      // candidate collides with a marked point
    }
  }
  if (r.extensions.size() != 2)
    r.violation = std::to_string(r.extensions.size()) + " valid roots for " + letter_name(unknown) + " instead of 2";
  return r;
}

}  // namespace detail

/// Completions of an assignment to aligned sextuples: two, one or none for
/// type 2, 3 or 4 when the quadruple is general.
inline ExtendResult extend(std::span<const ConicPoint<Rational>> z, const Assignment& assignment) {
  require_quadruple(z);
  std::array<std::optional<ConicPoint<Rational>>, 6> h;
  for (std::size_t k = 0; k < 6; ++k)
    if (assignment.slot[k] >= 0) h[k] = z[static_cast<std::size_t>(assignment.slot[k])];
  switch (assignment.type()) {
    case 4: {
      ExtendResult r;
      if (cross_ratio(*h[A], *h[C], *h[D], *h[F]) == Rational(-1)) r.violation = "marked points at A, C, D, F are harmonic";
      return r;
    }
    case 3:
      return detail::extend_type3(h);
    case 2:
      return detail::extend_type2(h);
    default:
      throw Error(Errc::invalid_quadruple, "assignment of type " + std::to_string(assignment.type()));
  }
}

/// Sort key of a sextuple: field label, then normalized points with infinity last.
using SextupleKey = std::pair<Integer, std::vector<std::pair<int, QuadExt>>>;

inline SextupleKey sextuple_key(const Extension& ext) {
  SextupleKey key{ext.d, {}};
  for (const auto& p : ext.points) key.second.emplace_back(p.is_infinity() ? 1 : 0, p.is_infinity() ? QuadExt(0) : p.value());
  std::sort(key.second.begin(), key.second.end());
  return key;
}

struct Configuration {
  Integer d;
  std::vector<ConicPoint<QuadExt>> points;  ///< sorted
  int type = 0;                             ///< type of the assignments reaching it
  std::vector<int> assignments;             ///< indices into enumerate_assignments()
};

struct ExperimentReport {
  std::array<int, 3> tally{};            ///< assignments of type 2, 3, 4
  std::array<int, 3> extension_count{};  ///< extensions found per type
  std::vector<Configuration> configurations;
  int from_type2 = 0, from_type3 = 0;
  bool orbits_of_eight = false;  ///< every configuration reached by exactly 8 assignments
  std::vector<std::string> violations;

  bool generic() const { return violations.empty(); }
  std::size_t count() const { return configurations.size(); }
};

/// Extends every assignment of Z and counts the distinct aligned sextuples.
inline ExperimentReport run_experiment(std::span<const ConicPoint<Rational>> z) {
  require_quadruple(z);
  ExperimentReport report;
  if (quartic_invariants(form_from_roots(z)).j3.is_zero()) report.violations.push_back("the quadruple is harmonic");
  std::map<SextupleKey, Configuration> seen;
  const auto assignments = enumerate_assignments();
  for (std::size_t idx = 0; idx < assignments.size(); ++idx) {
    const Assignment& a = assignments[idx];
    const int type = a.type();
    ++report.tally[static_cast<std::size_t>(type - 2)];
    ExtendResult r = extend(z, a);
    if (!r.violation.empty()) report.violations.push_back(a.to_string() + ": " + r.violation);
    report.extension_count[static_cast<std::size_t>(type - 2)] += static_cast<int>(r.extensions.size());
    for (const auto& ext : r.extensions) {
      auto [it, fresh] = seen.try_emplace(sextuple_key(ext));
      Configuration& c = it->second;
      if (fresh) {
        c.d = ext.d;
        c.type = type;
        for (const auto& [inf, value] : it->first.second)
          c.points.push_back(inf ? ConicPoint<QuadExt>::infinity() : ConicPoint<QuadExt>::at(value));
      } else if (c.type != type) {
        report.violations.push_back(a.to_string() + ": reaches a configuration also reached from type " + std::to_string(c.type));
      }
      c.assignments.push_back(static_cast<int>(idx));
    }
  }
  report.orbits_of_eight = !seen.empty();
  for (auto& [key, c] : seen) {
    report.orbits_of_eight = report.orbits_of_eight && c.assignments.size() == 8;
    // more hits mean the sextuple has a larger symmetry group than the generic one
    if (c.assignments.size() != 8)
      report.violations.push_back("a configuration over d = " + key.first.get_str() + " is reached by " +
                                  std::to_string(c.assignments.size()) + " assignments instead of 8");
    (c.type == 2 ? report.from_type2 : report.from_type3) += 1;
    report.configurations.push_back(std::move(c));
  }
  return report;
}

}  // namespace ricochet
