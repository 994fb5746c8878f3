#include <gtest/gtest.h>

#include "random.hpp"
#include "ricochet/ricochet.hpp"

namespace ricochet {
namespace {

using testing::Gen;

RatFunc ff(const RatFunc& t) { return (t - RatFunc(1)) / (t + RatFunc(1)); }

UPoly upoly(std::vector<long> low_first) {
  std::vector<Rational> c;
  for (long v : low_first) c.emplace_back(v);
  return UPoly(std::move(c));
}

TEST(Rational, CanonicalizesOnConstruction) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0, -7).den(), 1);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, ParsesTextualSyntax) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-95/31"), Rational(-95, 31));
  EXPECT_EQ(Rational::parse("+6/4"), Rational(3, 2));
  for (const char* bad : {"", "1/0", "1/-2", "abc", "1.5", "/3", "3/", " 1"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::malformed_scalar) << bad;
    }
  }
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) / Rational(-1, 4), Rational(-2));
  try {
    (void)(Rational(1) / Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::divide_by_zero);
  }
}

TEST(Rational, SquarefreePart) {
  EXPECT_EQ(squarefree_part(1260), 35);
  EXPECT_EQ(squarefree_part(-12), -3);
  EXPECT_EQ(squarefree_part(49), 1);
  EXPECT_EQ(squarefree_part(2 * 1000003L * 1000003L), 2);
  EXPECT_EQ(squarefree_part(Integer("1000003") * Integer("1000033")), Integer("1000003") * Integer("1000033"));
}

TEST(QuadExt, DefiningRelation) {
  const QuadExt r = QuadExt::sqrt(Rational(-3));
  EXPECT_EQ(r.d(), -3);
  EXPECT_EQ(r * r, QuadExt(Rational(-3)));
  EXPECT_TRUE((r * r).is_rational());
  const QuadExt half = QuadExt::sqrt(Rational(1260, 4));  // sqrt(315) = 3 sqrt(35)
  EXPECT_EQ(half.d(), 35);
  EXPECT_EQ(half.b(), Rational(3));
  EXPECT_EQ(QuadExt::sqrt(Rational(9, 4)), QuadExt(Rational(3, 2)));
}

TEST(QuadExt, ZeroIsCrossFieldEqual) {
  const QuadExt z5(Rational(0), Rational(0), 5);
  const QuadExt z7 = QuadExt::sqrt(Rational(7)) - QuadExt::sqrt(Rational(7));
  EXPECT_TRUE(z5.is_zero());
  EXPECT_EQ(z5, z7);
  EXPECT_EQ(z5, QuadExt(0));
  EXPECT_EQ(QuadExt(Rational(2), Rational(0), 5), QuadExt(Rational(2), Rational(0), -1));
}

TEST(QuadExt, DomainErrors) {
  const QuadExt s5 = QuadExt::sqrt(Rational(5));
  const QuadExt s7 = QuadExt::sqrt(Rational(7));
  try {
    (void)(s5 + s7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain_mismatch);
  }
  EXPECT_THROW((void)(s5 / QuadExt(0)), Error);
  EXPECT_THROW(QuadExt(Rational(1), Rational(1), 4), Error);
  EXPECT_THROW(QuadExt(Rational(1), Rational(1), 1), Error);
  // rationals mix with every extension
  EXPECT_EQ((s5 + QuadExt(Rational(1))).d(), 5);
}

TEST(RatFunc, CancelsCommonFactors) {
  const RatFunc f(upoly({-1, 0, 1}), upoly({1, 1}));  // (t^2 - 1)/(t + 1)
  EXPECT_EQ(f.numerator(), upoly({-1, 1}));
  EXPECT_EQ(f.denominator(), upoly({1}));
  const RatFunc g(upoly({2}), upoly({4, 2}));  // 2/(2t + 4) = 1/(t + 2)
  EXPECT_EQ(g.numerator(), upoly({1}));
  EXPECT_EQ(g.denominator(), upoly({2, 1}));
  EXPECT_THROW(RatFunc(upoly({1}), UPoly{}), Error);
}

TEST(RatFunc, FfComposedWithItselfIsMinusInverse) {
  // ((t-1)/(t+1) - 1)/((t-1)/(t+1) + 1) = (-2/(t+1))/(2t/(t+1)) = -1/t
  const RatFunc t = RatFunc::t();
  EXPECT_EQ(ff(ff(t)), RatFunc(-1) / t);
  // ff has order four
  EXPECT_EQ(ff(ff(ff(ff(t)))), t);
}

TEST(RatFunc, Evaluation) {
  const RatFunc t = RatFunc::t();
  EXPECT_EQ(ff(t).evaluate(Rational(4)), Rational(3, 5));
  try {
    ff(t).evaluate(Rational(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::evaluation_pole);
  }
  // delta02(t) = -(1/2)(t^2+1)^2/(t+1)^2 at t = 1: -(1/2)*4/4
  const RatFunc t2p1 = t * t + RatFunc(1);
  const RatFunc delta02 = RatFunc(Rational(-1, 2)) * t2p1 * t2p1 / ((t + RatFunc(1)) * (t + RatFunc(1)));
  EXPECT_EQ(delta02.evaluate(Rational(1)), Rational(-1, 2));
}

RatFunc random_ratfunc(Gen& g) {
  std::vector<Rational> n, d;
  for (int k = 0; k < 3; ++k) n.push_back(g.rational(5));
  for (int k = 0; k < 2; ++k) d.push_back(g.rational(5));
  d.push_back(Rational(1));
  return RatFunc(UPoly(n), UPoly(d));
}

QuadExt random_quad(Gen& g, long d) { return QuadExt(g.rational(), g.rational(), d); }

template <class F, class Make>
void check_field_axioms(Make make) {
  for (int i = 0; i < 40; ++i) {
    const F x = make(), y = make(), z = make();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x - x, F(0));
    if (!x.is_zero()) EXPECT_EQ(x * (F(1) / x), F(1));
  }
}

TEST(FieldAxioms, Rational) {
  Gen g(11);
  check_field_axioms<Rational>([&] { return g.rational(); });
}

TEST(FieldAxioms, QuadExt) {
  Gen g(12);
  check_field_axioms<QuadExt>([&] { return random_quad(g, 5); });
  check_field_axioms<QuadExt>([&] { return random_quad(g, -3); });
}

TEST(FieldAxioms, RatFunc) {
  Gen g(13);
  check_field_axioms<RatFunc>([&] { return random_ratfunc(g); });
}

TEST(RatFunc, CanonicalizationIsIdempotent) {
  Gen g(14);
  for (int i = 0; i < 30; ++i) {
    const RatFunc f = random_ratfunc(g) * random_ratfunc(g);
    const RatFunc again(f.numerator(), f.denominator());
    EXPECT_EQ(again, f);
    EXPECT_EQ(f.denominator().leading(), Rational(1));
    EXPECT_EQ(gcd(f.numerator(), f.denominator()).degree(), f.numerator().is_zero() ? f.denominator().degree() : 0);
  }
}

TEST(RatFunc, EvaluationCommutesWithArithmetic) {
  Gen g(15);
  int checked = 0;
  while (checked < 40) {
    const RatFunc f = random_ratfunc(g), h = random_ratfunc(g);
    const Rational at = g.rational(9);
    try {
      const Rational fv = f.evaluate(at), hv = h.evaluate(at);
      EXPECT_EQ((f * h).evaluate(at), fv * hv);
      EXPECT_EQ((f + h).evaluate(at), fv + hv);
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::evaluation_pole);
    }
  }
}

TEST(Poly, GcdAndDivision) {
  const UPoly a = upoly({-1, 0, 1});   // t^2 - 1
  const UPoly b = upoly({1, 2, 1});    // (t + 1)^2
  EXPECT_EQ(gcd(a, b), upoly({1, 1}));
  auto [q, r] = a.divmod(upoly({-1, 1}));
  EXPECT_EQ(q, upoly({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(to_string(upoly({-1, 0, 3})), "3*t^2 - 1");
}

TEST(MPoly, ExpandsProducts) {
  const MPoly a0 = MPoly::var(0), a1 = MPoly::var(1);
  const MPoly sq = (a0 + a1) * (a0 + a1);
  EXPECT_EQ(sq, a0 * a0 + MPoly(2) * a0 * a1 + a1 * a1);
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(sq.coeff({1, 1}), Rational(2));
  EXPECT_EQ(sq.evaluate({Rational(2), Rational(3)}), Rational(25));
  EXPECT_TRUE((sq - sq).is_zero());
}

}  // namespace
}  // namespace ricochet
