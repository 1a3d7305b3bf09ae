#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qbern/bernstein.hpp"

using namespace qbern;

namespace {

const MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y);
const MPoly S = MPoly(1) + X - Y;

std::vector<double> samples(long n, double (*f)(double)) {
  std::vector<double> v;
  for (long k = 0; k <= n; ++k) v.push_back(f(static_cast<double>(k) / static_cast<double>(n)));
  return v;
}

}  // namespace

TEST(Basis, SmallCases) {
  EXPECT_EQ(basis(0, 0).expr, MPoly(1));
  EXPECT_EQ(basis(1, 2).expr, RatQ(2) * X * (MPoly(1) - Y));
  EXPECT_TRUE(basis(3, 2).expr.is_zero());
  EXPECT_TRUE(basis(-1, 2).expr.is_zero());
  EXPECT_THROW(basis(0, -1), std::invalid_argument);
}

TEST(Basis, RecurrenceAndPartition) {
  for (long n = 0; n <= 8; ++n) {
    MPoly sum;
    for (long k = 0; k <= n + 1; ++k) {
      ASSERT_EQ((MPoly(1) - Y) * basis(k, n).expr + X * basis(k - 1, n).expr, basis(k, n + 1).expr);
      sum += basis(k, n).expr;
    }
    ASSERT_EQ(sum, S.pow(static_cast<unsigned>(n)));
  }
}

TEST(BasisNumeric, MatchesSymbolicEvaluation) {
  const NumericCtx ctx{0.5, 0.3, 0.7};
  const double x = q_number_real(ctx.x1, ctx.q), y = q_number_real(ctx.x2, ctx.q);
  // [1 - x2]_{1/q} = 1 - [x2]_q
  EXPECT_NEAR(q_number_real(1.0 - ctx.x2, 1.0 / ctx.q), 1.0 - y, 1e-14);
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      const double expected = binomial_real(n, k) * std::pow(x, k) * std::pow(1 - y, n - k);
      ASSERT_NEAR(basis_eval_real(k, n, ctx), expected, 1e-13);
    }
}

TEST(BasisNumeric, EdgeCases) {
  EXPECT_DOUBLE_EQ(basis_eval_real(0, 0, {0.5, 0.2, 0.9}), 1.0);
  EXPECT_NEAR(basis_eval_real(1, 2, {0.5, 1.0, 1.0}), 0.0, 1e-15);
  double sum = 0;
  for (long k = 0; k <= 7; ++k) sum += basis_eval_real(k, 7, {0.3, 0.4, 0.4});
  EXPECT_NEAR(sum, 1.0, 1e-13);
  EXPECT_THROW(basis_eval_real(0, 1, {1.0, 0.2, 0.2}), std::invalid_argument);
  EXPECT_THROW(basis_eval_real(0, 1, {0.5, 1.2, 0.2}), std::invalid_argument);
}

TEST(Operator, Moments) {
  const NumericCtx ctx{0.5, 0.3, 0.7};
  const double a = q_number_real(ctx.x1, ctx.q), b = q_number_real(ctx.x2, ctx.q);
  for (long n : {1L, 4L, 9L}) {
    EXPECT_NEAR(operator_apply(samples(n, [](double) { return 1.0; }), n, ctx), std::pow(1 + a - b, n), 1e-12);
    EXPECT_NEAR(operator_apply(samples(n, [](double t) { return t; }), n, ctx), a * std::pow(1 + a - b, n - 1),
                1e-12);
  }
  const NumericCtx diag{0.9, 0.5, 0.5};
  const double x = q_number_real(0.5, 0.9);
  for (long n : {10L, 100L, 1000L}) {
    const double got = operator_apply(samples(n, [](double t) { return t * t; }), n, diag);
    EXPECT_NEAR(got, (n - 1.0) / n * x * x + x / n, 1e-12);
  }
  EXPECT_THROW(operator_apply(std::vector<double>{1.0}, 2, ctx), std::invalid_argument);
}

TEST(GeneratingFunction, Coefficients) {
  const auto c0 = genfun_coefficients(0, 8);
  ASSERT_EQ(c0.size(), 9U);
  for (long n = 0; n <= 8; ++n) EXPECT_EQ(c0[n], (MPoly(1) - Y).pow(static_cast<unsigned>(n)));
  EXPECT_TRUE(genfun_coefficients(2, 8)[1].is_zero());
  EXPECT_EQ(genfun_coefficients(1, 8)[3], RatQ(3) * X * (MPoly(1) - Y).pow(2));
  for (long k = 0; k <= 4; ++k) {
    const auto c = genfun_coefficients(k, 8);
    for (long n = 0; n <= 8; ++n) ASSERT_EQ(c[n], basis(k, n).expr);
  }
}

TEST(MomentsSymbolic, ClosedForms) {
  EXPECT_EQ(moments_symbolic(3).m0, S.pow(3));
  EXPECT_EQ(moments_symbolic(2).m1, X * S);
  EXPECT_EQ(moments_symbolic(2).m2.subst(Var::Y, X), RatQ(ratio(1, 2)) * X * X + RatQ(ratio(1, 2)) * X);
  for (long n = 2; n <= 8; ++n) {
    const Moments got = moments_symbolic(n), want = moment_closed_forms(n);
    ASSERT_EQ(got.m0, want.m0);
    ASSERT_EQ(got.m1, want.m1);
    ASSERT_EQ(got.m2, want.m2);
  }
  EXPECT_THROW(moments_symbolic(1), std::invalid_argument);
}
