#include <gtest/gtest.h>

#include "qbern/mpoly.hpp"
#include "qbern/poly.hpp"
#include "qbern/qcomb.hpp"
#include "qbern/ratq.hpp"
#include "qbern/text.hpp"
#include "random_values.hpp"

using namespace qbern;

namespace {

PolyQ P(std::initializer_list<long> low_to_high) {
  std::vector<BigRat> c;
  for (long v : low_to_high) c.emplace_back(v);
  return PolyQ(std::move(c));
}

const RatQ q = RatQ::q();
const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), T = MPoly::var(Var::T);

constexpr int kTrials = 60;

}  // namespace

// ---- PolyQ -----------------------------------------------------------------

TEST(PolyQ, DivmodReconstructs) {
  proptest::Gen g(11);
  for (int i = 0; i < kTrials; ++i) {
    PolyQ a = g.poly(7), b = g.nonzero_poly(4);
    auto [quo, rem] = divmod(a, b);
    EXPECT_EQ(quo * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
}

TEST(PolyQ, GcdIsMonicCommonFactor) {
  PolyQ g = gcd(P({-1, 0, 1}), P({-1, 1}));  // gcd(q^2-1, q-1)
  EXPECT_EQ(g, P({-1, 1}));
  EXPECT_EQ(gcd(P({1, 1}), P({2})), PolyQ(1));
  EXPECT_THROW(exact_div(P({1, 0, 1}), P({1, 1})), std::logic_error);
}

TEST(PolyQ, RenderForms) {
  EXPECT_EQ(P({-1, 2, 1}).render(), "q^2+2*q-1");
  EXPECT_EQ(PolyQ::monomial(ratio(1, 3), 1).render(), "1/3*q");
  EXPECT_EQ((-PolyQ::q()).render(), "-q");
  EXPECT_EQ(PolyQ().render(), "0");
}

TEST(PolyQ, ReversedIsQDegreeTimesPAtInverse) {
  // 1 + 2q + 3q^2  ->  3 + 2q + q^2
  EXPECT_EQ(P({1, 2, 3}).reversed(), P({3, 2, 1}));
}

// ---- RatQ canonical form ---------------------------------------------------

TEST(RatQ, MakeReducesAndNormalizes) {
  EXPECT_EQ(RatQ::make(P({-1, 0, 1}), P({-1, 1})), RatQ(P({1, 1})));
  EXPECT_TRUE(RatQ::make(PolyQ(), P({2, 0, 0, 1})).is_zero());
  const RatQ r = RatQ::make(P({1, -1}), P({-1, 0, 1}));
  EXPECT_EQ(r, RatQ::make(PolyQ(-1), P({1, 1})));
  EXPECT_EQ(r.render(), "-1/(q+1)");
  EXPECT_TRUE(r.den().lead() == 1);
}

TEST(RatQ, ZeroDenominatorThrows) {
  EXPECT_THROW(RatQ::make(PolyQ(1), PolyQ()), std::domain_error);
  EXPECT_THROW(RatQ(0).inverse(), std::domain_error);
}

TEST(RatQ, Arithmetic) {
  const RatQ inv2 = RatQ::make(1, q_int(2));
  EXPECT_EQ(inv2 + q * inv2, RatQ(1));
  EXPECT_EQ(RatQ(q_int(2)) * inv2, RatQ(1));
  EXPECT_EQ(RatQ(1) - inv2, RatQ::make(PolyQ::q(), P({1, 1})));
  EXPECT_EQ((RatQ(1) - inv2).eval(2), ratio(2, 3));
}

TEST(RatQ, SubstQinv) {
  EXPECT_EQ(q.subst_qinv(), q.inverse());
  EXPECT_EQ(RatQ::make(1, P({1, 1})).subst_qinv(), RatQ::make(PolyQ::q(), P({1, 1})));
  const RatQ r = RatQ(P({1, 1, 1})).subst_qinv();
  EXPECT_EQ(r, RatQ::make(P({1, 1, 1}), PolyQ::monomial(1, 2)));
  EXPECT_EQ(r.eval(2), ratio(7, 4));
}

TEST(RatQ, Eval) {
  EXPECT_EQ(RatQ(q_int(3)).eval(2), BigRat(7));
  EXPECT_THROW(RatQ::make(1, P({-1, 1})).eval(1), std::domain_error);
  const RatQ beta2 = RatQ::make(PolyQ::q(), P({1, 1}) * P({1, 1, 1}));
  EXPECT_EQ(beta2.eval(1), ratio(1, 6));
}

TEST(RatQ, NegativePowers) {
  EXPECT_EQ(q.pow(-2) * q.pow(2), RatQ(1));
  EXPECT_EQ(q.pow(0), RatQ(1));
}

// ---- RatQ properties -------------------------------------------------------

TEST(RatQProperty, CanonicityUnderCommonFactor) {
  proptest::Gen g(1);
  for (int i = 0; i < kTrials; ++i) {
    PolyQ a = g.poly(6), b = g.nonzero_poly(6), c = g.nonzero_poly(6);
    const RatQ lhs = RatQ::make(a * c, b * c), rhs = RatQ::make(a, b);
    ASSERT_EQ(lhs, rhs) << lhs.render() << " vs " << rhs.render();
  }
}

TEST(RatQProperty, FieldLaws) {
  proptest::Gen g(2);
  for (int i = 0; i < kTrials; ++i) {
    const RatQ a = g.ratq(), b = g.ratq(), c = g.ratq();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, RatQ());
    if (!a.is_zero()) {
      ASSERT_EQ(a / a, RatQ(1));
    }
  }
}

TEST(RatQProperty, QinvIsAnInvolution) {
  proptest::Gen g(3);
  for (int i = 0; i < kTrials; ++i) {
    const RatQ a = g.ratq(4);
    ASSERT_EQ(a.subst_qinv().subst_qinv(), a) << a.render();
  }
}

TEST(RatQProperty, QinvMatchesEvaluationAtReciprocal) {
  proptest::Gen g(33);
  for (int i = 0; i < kTrials; ++i) {
    const RatQ a = g.ratq(4);
    const BigRat at(3), back = ratio(1, 3);
    try {
      ASSERT_EQ(a.subst_qinv().eval(at), a.eval(back));
    } catch (const std::domain_error&) {
    }
  }
}

TEST(RatQProperty, EvaluationIsMultiplicative) {
  proptest::Gen g(4);
  for (int i = 0; i < kTrials; ++i) {
    const RatQ a = g.ratq(), b = g.ratq();
    for (long q0 : {-2L, 3L, 5L}) {
      BigRat va, vb;
      try {
        va = a.eval(q0);
        vb = b.eval(q0);
      } catch (const std::domain_error&) {
        continue;
      }
      ASSERT_EQ((a * b).eval(q0), va * vb);
      ASSERT_EQ((a + b).eval(q0), va + vb);
    }
  }
}

// ---- MPoly -----------------------------------------------------------------

TEST(MPoly, Basics) {
  EXPECT_EQ((X * X * Y).deriv(Var::X), RatQ(2) * X * Y);
  EXPECT_EQ((X + Y).subst(Var::Y, MPoly(1) - X), MPoly(1));
  EXPECT_TRUE((X * (MPoly(1) - Y) - (X - X * Y)).is_zero());
  EXPECT_EQ((X + Y).pow(2), X * X + RatQ(2) * X * Y + Y * Y);
}

TEST(MPoly, EvalAndCompose) {
  const MPoly p = X * Y + T;
  EXPECT_EQ(p.eval(RatQ(2), RatQ(3), q), RatQ(6) + q);
  const MPoly swapped = p.compose({Y, X, std::nullopt});
  EXPECT_EQ(swapped, p);
}

TEST(MPoly, ZeroCoefficientsDisappear) {
  const MPoly p = X - X;
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(MPolyProperty, MixedPartialsCommute) {
  proptest::Gen g(5);
  for (int i = 0; i < kTrials; ++i) {
    const MPoly p = g.mpoly();
    ASSERT_EQ(p.deriv(Var::X).deriv(Var::Y), p.deriv(Var::Y).deriv(Var::X));
    ASSERT_EQ(p.deriv(Var::T).deriv(Var::X), p.deriv(Var::X).deriv(Var::T));
  }
}

TEST(MPolyProperty, RingLaws) {
  proptest::Gen g(6);
  for (int i = 0; i < 30; ++i) {
    const MPoly a = g.mpoly(3, 2), b = g.mpoly(3, 2), c = g.mpoly(3, 2);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b).deriv(Var::X), a.deriv(Var::X) * b + a * b.deriv(Var::X));
  }
}

// ---- text ------------------------------------------------------------------

TEST(Text, ParsesCanonicalForms) {
  EXPECT_EQ(parse_ratq("(q^2+1)/(q+1)"), RatQ::make(P({1, 0, 1}), P({1, 1})));
  EXPECT_EQ(parse_mpoly("3*X^2*Y*T^0"), RatQ(3) * X * X * Y);
  EXPECT_EQ(parse_ratq("q^-2"), q.pow(-2));
  EXPECT_EQ(parse_mpoly("-(1/3)*X + 2"), RatQ(ratio(-1, 3)) * X + MPoly(2));
}

TEST(Text, RejectsMalformedInput) {
  EXPECT_THROW(parse_mpoly("X +"), ParseError);
  EXPECT_THROW(parse_mpoly("1/X"), ParseError);
  EXPECT_THROW(parse_mpoly("X^-1"), ParseError);
  EXPECT_THROW(parse_ratq("X"), std::invalid_argument);
  EXPECT_THROW(parse_mpoly("Z"), ParseError);
}

TEST(TextProperty, RenderParseRoundTrip) {
  proptest::Gen g(7);
  for (int i = 0; i < kTrials; ++i) {
    const RatQ r = g.ratq(4);
    ASSERT_EQ(parse_ratq(r.render()), r) << r.render();
    const MPoly m = g.mpoly();
    ASSERT_EQ(parse_mpoly(m.render()), m) << m.render();
  }
}
