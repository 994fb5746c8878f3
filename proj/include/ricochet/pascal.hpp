#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ricochet/conic.hpp"

namespace ricochet {

/// Letters A..F index sextuples throughout.
enum Letter : int { A = 0, B, C, D, E, F };

inline constexpr std::array<char, 6> kLetterNames{'A', 'B', 'C', 'D', 'E', 'F'};

inline std::string letter_name(int letter) { return std::string(1, kLetterNames.at(static_cast<std::size_t>(letter))); }

template <Field K>
using Sextuple = std::array<ConicPoint<K>, 6>;

/// First pair of coincident entries, as indices, or {-1, -1}.
template <Field K>
std::pair<int, int> first_collision(std::span<const ConicPoint<K>> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return {static_cast<int>(i), static_cast<int>(j)};
  return {-1, -1};
}

/// Six distinct conic points arranged as [[r00, r01, r02], [r10, r11, r12]].
template <Field K>
class SexArray {
 public:
  using Row = std::array<ConicPoint<K>, 3>;

  SexArray(Row top, Row bottom) : rows_{std::move(top), std::move(bottom)} {
    const std::array<ConicPoint<K>, 6> all{rows_[0][0], rows_[0][1], rows_[0][2], rows_[1][0], rows_[1][1], rows_[1][2]};
    if (first_collision<K>(all).first >= 0) throw Error(Errc::invalid_array, "repeated point in Pascal array");
  }

  const ConicPoint<K>& at(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }

  SexArray row_swapped() const { return SexArray(rows_[1], rows_[0]); }

  /// Swap the two entries of one column.
  SexArray column_switched(int col) const {
    Row top = rows_[0], bottom = rows_[1];
    std::swap(top[static_cast<std::size_t>(col)], bottom[static_cast<std::size_t>(col)]);
    return SexArray(std::move(top), std::move(bottom));
  }

  SexArray columns_permuted(const std::array<int, 3>& perm) const {
    Row top, bottom;
    for (std::size_t k = 0; k < 3; ++k) {
      top[k] = rows_[0][static_cast<std::size_t>(perm[k])];
      bottom[k] = rows_[1][static_cast<std::size_t>(perm[k])];
    }
    return SexArray(std::move(top), std::move(bottom));
  }

 private:
  std::array<Row, 2> rows_;
};

template <Field K>
struct PascalLine {
  LineByPole<K> line;
  std::array<PlanePoint<K>, 3> crosshairs;
};

namespace detail {

template <Field K>
PlanePoint<K> crosshair(const ConicPoint<K>& a, const ConicPoint<K>& b, const ConicPoint<K>& c, const ConicPoint<K>& d) {
  try {
    return meet(chord(a, b), chord(c, d));
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_meet) throw;
    throw Error(Errc::degenerate_pascal, "two chords of the array coincide");
  }
}

}  // namespace detail

/// Line through the cross-hairs r00r11 . r01r10, r01r12 . r02r11, r00r12 . r02r10.
template <Field K>
PascalLine<K> pascal(const SexArray<K>& arr) {
  auto r = [&](int i, int j) -> const ConicPoint<K>& { return arr.at(i, j); };
  std::array<PlanePoint<K>, 3> h{detail::crosshair(r(0, 0), r(1, 1), r(0, 1), r(1, 0)),
                                 detail::crosshair(r(0, 1), r(1, 2), r(0, 2), r(1, 1)),
                                 detail::crosshair(r(0, 0), r(1, 2), r(0, 2), r(1, 0))};
  std::size_t i = 0, j = 1;
  if (h[0] == h[1]) j = 2;
  if (h[i] == h[j]) throw Error(Errc::degenerate_pascal, "cross-hair points coincide");
  const LineByPole<K> line = join(h[i], h[j]);
  for (const auto& p : h)
    if (!incident(p, line)) throw Error(Errc::theorem_violation, "cross-hair points of a Pascal array are not collinear");
  return {line, std::move(h)};
}

/// Index layout of an array: positions 0..2 top row, 3..5 bottom row.
using ArrayPattern = std::array<int, 6>;

/// Lexicographically least pattern among the 12 row-swap and column
/// permutations of `pattern`.
inline ArrayPattern canonical_pattern(const ArrayPattern& pattern) {
  ArrayPattern best = pattern;
  std::array<int, 3> cols{0, 1, 2};
  do {
    for (int swap = 0; swap < 2; ++swap) {
      ArrayPattern candidate{};
      for (std::size_t k = 0; k < 3; ++k) {
        const auto c = static_cast<std::size_t>(cols[k]);
        candidate[k] = pattern[swap ? c + 3 : c];
        candidate[k + 3] = pattern[swap ? c : c + 3];
      }
      best = std::min(best, candidate);
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

/// The 60 canonical patterns, in increasing order.
inline const std::vector<ArrayPattern>& pascal_classes() {
  static const std::vector<ArrayPattern> classes = [] {
    std::vector<ArrayPattern> out;
    ArrayPattern p{0, 1, 2, 3, 4, 5};
    do {
      if (canonical_pattern(p) == p) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return classes;
}

inline std::string pattern_name(const ArrayPattern& p) {
  std::string s;
  for (std::size_t k = 0; k < 6; ++k) {
    if (k == 3) s += ';';
    s += kLetterNames[static_cast<std::size_t>(p[k])];
  }
  return s;
}

template <Field K>
SexArray<K> array_from_pattern(std::span<const ConicPoint<K>> pts, const ArrayPattern& p) {
  auto at = [&](std::size_t k) { return pts[static_cast<std::size_t>(p[k])]; };
  return SexArray<K>({at(0), at(1), at(2)}, {at(3), at(4), at(5)});
}

template <Field K>
struct PascalCensus {
  struct Entry {
    ArrayPattern pattern;
    PascalLine<K> pascal;
    int group;
  };
  std::vector<Entry> entries;              ///< one per class, in pattern order
  std::vector<std::vector<int>> groups;    ///< entry indices sharing a line
  bool all_distinct() const { return groups.size() == entries.size(); }
};

/// Pascal lines of all 60 classes of arrays on six labelled points.
template <Field K>
PascalCensus<K> all_pascals(std::span<const ConicPoint<K>> pts) {
  if (pts.size() != 6) throw Error(Errc::invalid_sextuple, "a Pascal census needs six points");
  if (auto [i, j] = first_collision(pts); i >= 0)
    throw Error(Errc::invalid_sextuple, "points " + letter_name(i) + " and " + letter_name(j) + " coincide");
  PascalCensus<K> census;
  for (const auto& pattern : pascal_classes()) {
    PascalLine<K> line = pascal(array_from_pattern(pts, pattern));
    int group = -1;
    for (std::size_t g = 0; g < census.groups.size() && group < 0; ++g)
      if (census.entries[static_cast<std::size_t>(census.groups[g].front())].pascal.line == line.line) group = static_cast<int>(g);
    if (group < 0) {
      group = static_cast<int>(census.groups.size());
      census.groups.emplace_back();
    }
    census.groups[static_cast<std::size_t>(group)].push_back(static_cast<int>(census.entries.size()));
    census.entries.push_back({pattern, std::move(line), group});
  }
  return census;
}

template <Field K>
PascalCensus<K> all_pascals(const Sextuple<K>& pts) {
  return all_pascals(std::span<const ConicPoint<K>>(pts));
}

/// Six points cut by three chords through Q: A, B, C = T1, T2, T3 and
/// F, E, D their partners under sigma_Q.
template <Field K>
struct InvolutiveSextuple {
  PlanePoint<K> q;
  Sextuple<K> points;

  SexArray<K> array() const {
    return SexArray<K>({points[A], points[B], points[C]}, {points[F], points[E], points[D]});
  }
};

template <Field K>
InvolutiveSextuple<K> build_involutive(const PlanePoint<K>& q, const ConicPoint<K>& t1, const ConicPoint<K>& t2,
                                       const ConicPoint<K>& t3) {
  if (q.on_conic()) throw Error(Errc::degenerate_involutive, "Q lies on the conic");
  const Mobius<K> s = involution_from_point(q);
  const Sextuple<K> pts{t1, t2, t3, s(t3), s(t2), s(t1)};
  if (auto [i, j] = first_collision<K>(pts); i >= 0)
    throw Error(Errc::degenerate_involutive, "points " + letter_name(i) + " and " + letter_name(j) + " coincide");
  return {q, pts};
}

/// The ricochet construction from A, C, D and B.
template <Field K>
struct RicoConfig {
  Sextuple<K> points;  ///< A..F
  ConicPoint<K> z;
  PlanePoint<K> u, v, w;
  LineByPole<K> pline;
  K t;  ///< parameter of B once A, C, D are sent to 0, inf, 1

  const ConicPoint<K>& operator[](int letter) const { return points[static_cast<std::size_t>(letter)]; }
};

template <Field K>
RicoConfig<K> build_ricochet(const ConicPoint<K>& a, const ConicPoint<K>& c, const ConicPoint<K>& d, const ConicPoint<K>& b) {
  const std::array<ConicPoint<K>, 3> acd{a, c, d};
  if (auto [i, j] = first_collision<K>(acd); i >= 0) {
    static const char* names[] = {"A", "C", "D"};
    throw Error(Errc::degenerate_rico, std::string("points ") + names[i] + " and " + names[j] + " coincide");
  }
  try {
    RicoConfig<K> cfg;
    cfg.v = meet(tangent(a), tangent(c));
    const ConicPoint<K> f = involution_from_point(cfg.v)(d);
    cfg.w = meet(chord(a, f), chord(c, d));
    cfg.z = involution_from_point(cfg.v)(b);
    const ConicPoint<K> e = involution_from_point(cfg.w)(cfg.z);
    cfg.points = {a, b, c, d, e, f};
    if (auto [i, j] = first_collision<K>(cfg.points); i >= 0)
      throw Error(Errc::degenerate_rico, "points " + letter_name(i) + " and " + letter_name(j) + " coincide");
    cfg.u = meet(chord(a, d), chord(c, f));
    cfg.pline = join(cfg.v, cfg.w);
    const Mobius<K> mu = mobius_through<K>({a, c, d}, {ConicPoint<K>::at(K(Rational(0))), ConicPoint<K>::infinity(),
                                                       ConicPoint<K>::at(K(Rational(1)))});
    cfg.t = mu(b).value();
    return cfg;
  } catch (const Error& e) {
    if (e.code() == Errc::degenerate_rico) throw;
    throw Error(Errc::degenerate_rico, std::string("ricochet construction failed: ") + e.what());
  }
}

/// psi = sigma_W o sigma_V, checked against sigma_V o sigma_U.
template <Field K>
Mobius<K> psi(const RicoConfig<K>& cfg) {
  const Mobius<K> sv = involution_from_point(cfg.v);
  const Mobius<K> result = involution_from_point(cfg.w) * sv;
  if (!(result == sv * involution_from_point(cfg.u)))
    throw Error(Errc::theorem_violation, "sigma_W sigma_V differs from sigma_V sigma_U");
  return result;
}

/// omega(B0): meet B0F with the p-line in H1, then take the other end of the
/// chord from A through H1. The same point via B0D, H2 and C is checked.
template <Field K>
ConicPoint<K> omega(const RicoConfig<K>& cfg, const ConicPoint<K>& b0) {
  const PlanePoint<K> h1 = meet(chord(b0, cfg[F]), cfg.pline);
  const PlanePoint<K> h2 = meet(chord(b0, cfg[D]), cfg.pline);
  const ConicPoint<K> via1 = other_intersection(cfg[A], h1);
  const ConicPoint<K> via2 = other_intersection(cfg[C], h2);
  if (!(via1 == via2)) throw Error(Errc::theorem_violation, "the two constructions of omega disagree");
  return via1;
}

template <Field K>
struct RicochetReport {
  PascalLine<K> first;   ///< [[A, B, C], [F, E, D]]
  PascalLine<K> second;  ///< [[A, E, C], [D, B, F]]
  LineByPole<K> common;
};

/// Both Pascals equal VW, U lies on it, and the two factorizations of psi agree.
template <Field K>
RicochetReport<K> verify_ricochet_theorem(const RicoConfig<K>& cfg) {
  const auto& p = cfg.points;
  PascalLine<K> first = pascal(SexArray<K>({p[A], p[B], p[C]}, {p[F], p[E], p[D]}));
  PascalLine<K> second = pascal(SexArray<K>({p[A], p[E], p[C]}, {p[D], p[B], p[F]}));
  if (!(first.line == cfg.pline) || !(second.line == cfg.pline))
    throw Error(Errc::theorem_violation, "the two ricochet Pascals are not both VW");
  if (!incident(cfg.u, cfg.pline)) throw Error(Errc::theorem_violation, "U, V, W are not collinear");
  psi(cfg);
  return {std::move(first), std::move(second), cfg.pline};
}

}  // namespace ricochet
