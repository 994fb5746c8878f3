#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ricochet/rational.hpp"

namespace ricochet {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Scale a rational vector to coprime integers whose first nonzero entry is positive.
inline IntVector primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(x.num() * (l / x.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) x = sign * x / g;
  return out;
}

inline IntVector primitive(const IntVector& v) {
  std::vector<Rational> r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return primitive(r);
}

namespace detail {

/// In-place fraction-free (Bareiss) forward elimination; returns pivot columns.
inline std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]);
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(IntMatrix m, std::size_t cols) { return detail::bareiss(m, cols).size(); }

/// Basis of {x : m x = 0}, one primitive vector per free column (that column
/// set to 1, the other free columns to 0).
inline IntMatrix integer_kernel(IntMatrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw Error(Errc::derivation_failure, "ragged matrix");
  const std::vector<std::size_t> pivots = detail::bareiss(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  IntMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = Rational(1);
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational acc(0);
      for (std::size_t c = pc + 1; c < cols; ++c)
        if (m[k][c] != 0) acc += Rational(m[k][c]) * x[c];
      x[pc] = -acc / Rational(m[k][pc]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// True iff `v` lies in the row span of `rows`.
inline bool in_span(const IntMatrix& rows, const IntVector& v) {
  if (rows.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  IntMatrix with = rows;
  with.push_back(v);
  return rank(with, v.size()) == rank(rows, v.size());
}

}  // namespace ricochet
