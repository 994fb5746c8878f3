#pragma once

#include <map>
#include <string>
#include <vector>

#include "ricochet/rational.hpp"

namespace ricochet {

/// Sparse polynomial over Q in variables a0, a1, ...; used to expand
/// covariants symbolically in the coefficients of a generic form.
class MPoly {
 public:
  /// Exponent vector without trailing zeros; the empty vector is the constant monomial.
  using Monomial = std::vector<unsigned>;

  MPoly() = default;
  MPoly(long value) : MPoly(Rational(value)) {}  // NOLINT
  MPoly(int value) : MPoly(Rational(value)) {}  // NOLINT
  MPoly(const Rational& value) {  // NOLINT
    if (!value.is_zero()) terms_.emplace(Monomial{}, value);
  }

  /// The variable a_index.
  static MPoly var(unsigned index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    MPoly p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  static MPoly term(Monomial exponents, Rational coeff) {
    MPoly p;
    trim(exponents);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exponents), std::move(coeff));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(Monomial exponents) const {
    trim(exponents);
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Total degree of the highest-degree term; -1 for zero.
  int degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
      int d = 0;
      for (unsigned e : m) d += static_cast<int>(e);
      best = std::max(best, d);
    }
    return best;
  }

  Rational evaluate(const std::vector<Rational>& values) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) term *= values.at(i).pow(m[i]);
      acc += term;
    }
    return acc;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) out += "-";
      const Rational mag = c.abs();
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += "a" + std::to_string(i);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) out += mag.to_string();
      else if (mag.is_one()) out += mono;
      else out += mag.to_string() + "*" + mono;
    }
    return out;
  }

 private:
  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

inline std::string to_string(const MPoly& p) { return p.to_string(); }

}  // namespace ricochet
