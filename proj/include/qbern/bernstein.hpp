#pragma once

// Two-variable q-Bernstein polynomials B_{k,n}(x1, x2 | q).
//
// Symbolically B_{k,n} = C(n,k) X^k (1 - Y)^{n-k} with X = [x1]_q and
// Y = [x2]_q, using [1 - x]_{1/q} = 1 - [x]_q. The numeric layer evaluates the
// q-numbers directly from (1 - q^x)/(1 - q) for real 0 < q < 1.

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "qbern/mpoly.hpp"

namespace qbern {

struct BernsteinBasis {
  long k = 0;
  long n = 0;
  MPoly expr;
};

/// B_{k,n}; zero when k > n or k < 0.
inline BernsteinBasis basis(long k, long n) {
  if (n < 0) throw std::invalid_argument("basis: n must be nonnegative");
  if (k < 0 || k > n) return {k, n, MPoly()};
  const MPoly one_minus_y = MPoly(1) - MPoly::var(Var::Y);
  MPoly expr = RatQ(BigRat(binomial(n, k))) * MPoly::var(Var::X, static_cast<int>(k)) *
               one_minus_y.pow(static_cast<unsigned>(n - k));
  return {k, n, std::move(expr)};
}

struct NumericCtx {
  double q = 0.5;
  double x1 = 0.0;
  double x2 = 0.0;

  void validate() const {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("NumericCtx: q must lie in (0, 1)");
    if (!(x1 >= 0.0 && x1 <= 1.0) || !(x2 >= 0.0 && x2 <= 1.0))
      throw std::invalid_argument("NumericCtx: x1 and x2 must lie in [0, 1]");
  }
};

/// [x]_q = (1 - q^x)/(1 - q) for real q != 1.
inline double q_number_real(double x, double q) { return (1.0 - std::pow(q, x)) / (1.0 - q); }

inline double binomial_real(long n, long k) {
  double c = 1.0;
  for (long i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

/// C(n,k) [x1]_q^k [1 - x2]_{1/q}^{n-k}, evaluated in floating point.
inline double basis_eval_real(long k, long n, const NumericCtx& ctx) {
  ctx.validate();
  if (n < 0) throw std::invalid_argument("basis_eval_real: n must be nonnegative");
  if (k < 0 || k > n) return 0.0;
  const double a = q_number_real(ctx.x1, ctx.q);
  const double b = q_number_real(1.0 - ctx.x2, 1.0 / ctx.q);
  return binomial_real(n, k) * std::pow(a, static_cast<double>(k)) * std::pow(b, static_cast<double>(n - k));
}

/// The q-Bernstein operator: sum_k f(k/n) B_{k,n}(x1, x2 | q), with f given by
/// its n+1 samples.
inline double operator_apply(std::span<const double> samples, long n, const NumericCtx& ctx) {
  if (n < 1) throw std::invalid_argument("operator_apply: n must be at least 1");
  if (samples.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("operator_apply: expected n+1 samples");
  double sum = 0.0;
  for (long k = 0; k <= n; ++k) sum += samples[static_cast<std::size_t>(k)] * basis_eval_real(k, n, ctx);
  return sum;
}

/// Coefficients of t^n/n!, n = 0..max_n, in (t X)^k exp(t (1 - Y)) / k!.
inline std::vector<MPoly> genfun_coefficients(long k, long max_n) {
  if (k < 0 || max_n < 0) throw std::invalid_argument("genfun_coefficients: negative argument");
  const MPoly one_minus_y = MPoly(1) - MPoly::var(Var::Y);
  // exp(t (1 - Y)) truncated at t^max_n.
  std::vector<MPoly> exp_series;
  exp_series.emplace_back(1);
  for (long m = 1; m <= max_n; ++m)
    exp_series.push_back(RatQ(ratio(1, m)) * exp_series.back() * one_minus_y);
  const MPoly lead = RatQ(make_rat(1, factorial(k))) * MPoly::var(Var::X, static_cast<int>(k));
  std::vector<MPoly> out(static_cast<std::size_t>(max_n) + 1);
  for (long n = k; n <= max_n; ++n)
    out[static_cast<std::size_t>(n)] = RatQ(BigRat(factorial(n))) * lead * exp_series[static_cast<std::size_t>(n - k)];
  return out;
}

struct Moments {
  MPoly m0;  // sum_k B_{k,n}
  MPoly m1;  // sum_k (k/n) B_{k,n}
  MPoly m2;  // sum_k (k/n)^2 B_{k,n}
};

/// Operator images of 1, t and t^2 as polynomials in X, Y.
inline Moments moments_symbolic(long n) {
  if (n < 2) throw std::invalid_argument("moments_symbolic: n must be at least 2");
  Moments m;
  for (long k = 0; k <= n; ++k) {
    const MPoly b = basis(k, n).expr;
    const BigRat t = ratio(k, n);
    m.m0 += b;
    m.m1 += RatQ(t) * b;
    m.m2 += RatQ(t * t) * b;
  }
  return m;
}

/// Closed forms: (1+X-Y)^n, X(1+X-Y)^{n-1}, ((n-1)/n) X^2 (1+X-Y)^{n-2} + (X/n)(1+X-Y)^{n-1}.
inline Moments moment_closed_forms(long n) {
  if (n < 2) throw std::invalid_argument("moment_closed_forms: n must be at least 2");
  const MPoly x = MPoly::var(Var::X);
  const MPoly s = MPoly(1) + x - MPoly::var(Var::Y);
  const auto un = static_cast<unsigned>(n);
  Moments m;
  m.m0 = s.pow(un);
  m.m1 = x * s.pow(un - 1);
  m.m2 = RatQ(ratio(n - 1, n)) * x * x * s.pow(un - 2) + RatQ(ratio(1, n)) * x * s.pow(un - 1);
  return m;
}

}  // namespace qbern
