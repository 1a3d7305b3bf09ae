#pragma once

// Registry of executable identity checks and the suite runner.
//
// Each entry declares its parameters with admissible ranges, a sweep over the
// points it is checked at by default, and a runner producing a Report. Where
// a statement is registered both in its stated form and in a corrected form,
// the stated form is kept under `<id>-literal`, the corrected one under
// `<id>-corrected`, and `<id>` tries the literal form first.

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qbern/bernstein.hpp"
#include "qbern/carlitz.hpp"
#include "qbern/expected_status.hpp"
#include "qbern/mpoly.hpp"
#include "qbern/padic.hpp"
#include "qbern/qcomb.hpp"
#include "qbern/report.hpp"

namespace qbern {

enum class Mode { ExactMPoly, ExactRatQ, NumericReal, NumericPadic };

inline std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::ExactMPoly: return "exact-mpoly";
    case Mode::ExactRatQ: return "exact-ratq";
    case Mode::NumericReal: return "numeric-real";
    case Mode::NumericPadic: return "numeric-padic";
  }
  return "?";
}

struct ParamSpec {
  std::string name;
  long long lo = 0;
  long long hi = 0;
};

struct IdentityEntry {
  std::string id;
  std::string statement;
  Mode mode = Mode::ExactMPoly;
  std::vector<ParamSpec> params;
  std::function<std::vector<Params>()> sweep;
  std::function<bool(const Params&)> admits;
  std::function<Report(const Params&)> run;
};

namespace checks {

inline long arg(const Params& p, const char* name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument(std::string("missing parameter ") + name);
  return static_cast<long>(it->second);
}

template <class T>
Report compare(const Params& params, const T& lhs, const T& rhs, std::string notes = {}) {
  Report r;
  r.params = params;
  r.status = lhs == rhs ? Status::Verified : Status::Failed;
  r.lhs = lhs.render();
  r.rhs = rhs.render();
  r.notes = std::move(notes);
  return r;
}

inline std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double rel_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline RatQ rat(const BigInt& z) { return RatQ(BigRat(z)); }

inline MPoly x_var() { return MPoly::var(Var::X); }
inline MPoly y_var() { return MPoly::var(Var::Y); }
inline MPoly one_plus_x_minus_y() { return MPoly(1) + x_var() - y_var(); }

// -- q-Bernstein structure ---------------------------------------------------

inline Report thm1(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  MPoly lhs = (MPoly(1) - y_var()) * basis(k, n).expr + x_var() * basis(k - 1, n).expr;
  return compare(p, lhs, basis(k, n + 1).expr);
}

inline Report lemma2_sym(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  const MPoly b = basis(k, n).expr;
  const MPoly dx = b.deriv(Var::X), dy = b.deriv(Var::Y);
  const MPoly ex = RatQ(n) * basis(k - 1, n - 1).expr;
  const MPoly ey = RatQ(-n) * basis(k, n - 1).expr;
  Report r;
  r.params = p;
  r.status = (dx == ex && dy == ey) ? Status::Verified : Status::Failed;
  r.lhs = "dX: " + dx.render() + "; dY: " + dy.render();
  r.rhs = "dX: " + ex.render() + "; dY: " + ey.render();
  return r;
}

inline constexpr double kDerivativeTolerance = 1e-5;
inline constexpr double kDerivativeStep = 1e-6;
inline constexpr double kOperatorTolerance = 1e-12;

inline Report lemma2_num(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n"), var = arg(p, "var");
  const NumericCtx ctx{0.5, 0.3, 0.7};
  const double q = ctx.q, h = kDerivativeStep;
  double fd = 0.0, formula = 0.0;
  if (var == 1) {
    NumericCtx up = ctx, down = ctx;
    up.x1 += h;
    down.x1 -= h;
    fd = (basis_eval_real(k, n, up) - basis_eval_real(k, n, down)) / (2 * h);
    const double qx = q_number_real(ctx.x1, q);
    formula = std::log(q) / (q - 1) * n * ((q - 1) * qx + 1) * basis_eval_real(k - 1, n - 1, ctx);
  } else {
    NumericCtx up = ctx, down = ctx;
    up.x2 += h;
    down.x2 -= h;
    fd = (basis_eval_real(k, n, up) - basis_eval_real(k, n, down)) / (2 * h);
    const double qx = q_number_real(ctx.x2, q);
    formula = std::log(q) / (1 - q) * n * ((q - 1) * qx + 1) * basis_eval_real(k, n - 1, ctx);
  }
  Report r;
  r.params = p;
  const double err = rel_error(fd, formula);
  r.status = err <= kDerivativeTolerance ? Status::Verified : Status::Failed;
  r.lhs = fmt_real(fd);
  r.rhs = fmt_real(formula);
  r.notes = "central difference h=1e-6 at q=0.5, x1=0.3, x2=0.7; relative error " + fmt_real(err) +
            " (tolerance 1e-5)";
  return r;
}

inline Report eq10(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  // B_{n-k,n} at (1 - x2, 1 - x1) with q -> 1/q: the new [x1] is 1 - Y and the
  // new [1 - x2]_{q} is X, i.e. X -> 1 - Y and Y -> 1 - X simultaneously.
  const MPoly mirrored = basis(n - k, n)
                             .expr.map_coefficients([](const RatQ& c) { return c.subst_qinv(); })
                             .compose({MPoly(1) - y_var(), MPoly(1) - x_var(), std::nullopt});
  return compare(p, mirrored, basis(k, n).expr);
}

inline MPoly operator_moment(long n, int power) {
  MPoly sum;
  for (long k = 0; k <= n; ++k) {
    const BigRat t = n == 0 ? BigRat(0) : ratio(k, n);
    BigRat w = 1;
    for (int i = 0; i < power; ++i) w *= t;
    sum += RatQ(w) * basis(k, n).expr;
  }
  return sum;
}

inline Report eq12(const Params& p) {
  const long n = arg(p, "n");
  return compare(p, operator_moment(n, 0), one_plus_x_minus_y().pow(static_cast<unsigned>(n)));
}

inline Report moment1(const Params& p) {
  const long n = arg(p, "n");
  return compare(p, operator_moment(n, 1), x_var() * one_plus_x_minus_y().pow(static_cast<unsigned>(n - 1)));
}

inline Report eq13(const Params& p) {
  const long n = arg(p, "n");
  const Moments got = moments_symbolic(n), want = moment_closed_forms(n);
  const MPoly diag = got.m2.subst(Var::Y, x_var());
  const MPoly diag_want = RatQ(ratio(n - 1, n)) * x_var() * x_var() + RatQ(ratio(1, n)) * x_var();
  Report r;
  r.params = p;
  r.status = (got.m2 == want.m2 && diag == diag_want) ? Status::Verified : Status::Failed;
  r.lhs = got.m2.render() + "; at Y=X: " + diag.render();
  r.rhs = want.m2.render() + "; at Y=X: " + diag_want.render();
  return r;
}

inline Report eq12_num(const Params& p) {
  const long n = arg(p, "n");
  const NumericCtx ctx{0.5, 0.3, 0.7};
  const double a = q_number_real(ctx.x1, ctx.q), b = q_number_real(ctx.x2, ctx.q);
  std::vector<double> ones(static_cast<std::size_t>(n) + 1, 1.0), ident(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) ident[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(n);
  const double m0 = operator_apply(ones, n, ctx), m1 = operator_apply(ident, n, ctx);
  const double w0 = std::pow(1 + a - b, static_cast<double>(n));
  const double w1 = a * std::pow(1 + a - b, static_cast<double>(n - 1));
  const double err = std::max(rel_error(m0, w0), rel_error(m1, w1));
  Report r;
  r.params = p;
  r.status = err <= kOperatorTolerance ? Status::Verified : Status::Failed;
  r.lhs = "f=1: " + fmt_real(m0) + "; f=t: " + fmt_real(m1);
  r.rhs = "f=1: " + fmt_real(w0) + "; f=t: " + fmt_real(w1);
  r.notes = "q=0.5, x1=0.3, x2=0.7; max relative error " + fmt_real(err) + " (tolerance 1e-12)";
  return r;
}

inline Report eq13_num(const Params& p) {
  const long n = arg(p, "n");
  const NumericCtx ctx{0.9, 0.5, 0.5};
  const double x = q_number_real(ctx.x1, ctx.q);
  std::vector<double> sq(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    sq[static_cast<std::size_t>(k)] = t * t;
  }
  const double got = operator_apply(sq, n, ctx);
  const double want = (static_cast<double>(n - 1) / n) * x * x + x / n;
  const double err = rel_error(got, want);
  Report r;
  r.params = p;
  r.status = err <= kOperatorTolerance ? Status::Verified : Status::Failed;
  r.lhs = fmt_real(got);
  r.rhs = fmt_real(want);
  r.notes = "q=0.9, x=0.5; relative error " + fmt_real(err) + " (tolerance 1e-12); n*|value-[x]^2| = " +
            fmt_real(n * std::abs(got - x * x));
  return r;
}

inline Report eq14(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  MPoly lhs = RatQ(ratio(n - k, n)) * basis(k, n).expr + RatQ(ratio(k + 1, n)) * basis(k + 1, n).expr;
  return compare(p, lhs, one_plus_x_minus_y() * basis(k, n - 1).expr);
}

inline Report thm3(const Params& p) {
  const long j = arg(p, "j"), n = arg(p, "n");
  MPoly lhs;
  for (long k = j; k <= n; ++k) lhs += RatQ(make_rat(binomial(k, j), binomial(n, j))) * basis(k, n).expr;
  MPoly rhs = MPoly::var(Var::X, static_cast<int>(j)) * one_plus_x_minus_y().pow(static_cast<unsigned>(n - j));
  return compare(p, lhs, rhs);
}

// X^k sum_{l=k}^n C(l,k) C(n,l) (-1)^{l-k} Y^{l + shift}
inline MPoly lincomb_rhs(long k, long n, long shift) {
  MPoly sum;
  for (long l = k; l <= n; ++l) {
    const BigInt c = binomial(l, k) * binomial(n, l) * sign_pow(l - k);
    sum += rat(c) * MPoly::var(Var::Y, static_cast<int>(l + shift));
  }
  return MPoly::var(Var::X, static_cast<int>(k)) * sum;
}

inline Report lincomb(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  // B_{k,n} = (X/Y)^k sum_l ... Y^l, multiplied through by Y^k.
  const MPoly lhs = MPoly::var(Var::Y, static_cast<int>(k)) * basis(k, n).expr;
  Report r = compare(p, lhs, lincomb_rhs(k, n, 0), "checked as Y^k B_{k,n} = X^k sum_l C(l,k)C(n,l)(-1)^(l-k) Y^l");
  if (r.status == Status::Verified) return r;
  for (long shift : {-k, k}) {
    if (shift == 0) continue;
    const MPoly alt = lincomb_rhs(k, n, shift);
    if (lhs == alt) {
      r.status = Status::CorrectedFormVerified;
      r.notes = "stated exponent fails; holds with Y^(l" + std::string(shift < 0 ? "" : "+") + std::to_string(shift) +
                ")";
      r.rhs = alt.render();
      return r;
    }
  }
  r.notes = "stated exponent fails; no l-shift by +-k holds";
  return r;
}

inline MPoly stirling_term(long k, const RatQ& s) {
  const RatQ weight = RatQ::q().pow(static_cast<long>(binomial(k, 2).get_si())) * RatQ(q_factorial(k));
  return (weight * s) * q_binomial_symbolic(k);
}

inline Report stirling(const Params& p) {
  const long j = arg(p, "j");
  MPoly rhs;
  for (long k = 0; k <= j; ++k) rhs += stirling_term(k, q_stirling2(j, k));
  return compare(p, q_number_symbolic().pow(static_cast<unsigned>(j)), rhs,
                 "[x]^j = sum_k q^C(k,2) [x choose k]_q [k]_q! S_q(j,k) in T = q^x");
}

inline Report stirling_literal(const Params& p) {
  const long j = arg(p, "j");
  MPoly rhs;
  for (long k = 0; k <= j; ++k) rhs += stirling_term(k, q_stirling2(k, j - k));
  return compare(p, q_number_symbolic().pow(static_cast<unsigned>(j)), rhs,
                 "stated indexing S_q(k, j-k) with summation index k = 0..j");
}

inline Report genfun(const Params& p) {
  const long k = arg(p, "k");
  constexpr long kMaxN = 8;
  const auto coeffs = genfun_coefficients(k, kMaxN);
  Report r;
  r.params = p;
  r.status = Status::Verified;
  for (long n = 0; n <= kMaxN; ++n) {
    const MPoly want = basis(k, n).expr;
    const MPoly& got = coeffs[static_cast<std::size_t>(n)];
    if (!(got == want)) r.status = Status::Failed;
    const std::string sep = n == 0 ? "" : "; ";
    r.lhs += sep + got.render();
    r.rhs += sep + want.render();
  }
  r.notes = "coefficients of t^n/n! for n = 0..8";
  return r;
}

// -- q-Bernoulli side ---------------------------------------------------------

inline BigRat classical_bernoulli(long n) {
  // sum_{i<=m} C(m+1, i) B_i = 0 for m >= 1, B_0 = 1, so B_1 = -1/2.
  std::vector<BigRat> b{BigRat(1)};
  for (long m = 1; m <= n; ++m) {
    BigRat s = 0;
    for (long i = 0; i < m; ++i) s += BigRat(binomial(m + 1, i)) * b[static_cast<std::size_t>(i)];
    b.push_back(-s / BigRat(m + 1));
  }
  return b[static_cast<std::size_t>(n)];
}

inline Report beta_classical(const Params& p) {
  const long n = arg(p, "n");
  const RatQ beta = carlitz_beta(n);
  Report r;
  r.params = p;
  r.lhs = beta.eval(BigRat(1)).get_str();
  r.rhs = classical_bernoulli(n).get_str();
  r.status = r.lhs == r.rhs ? Status::Verified : Status::Failed;
  r.notes = "beta_n = " + beta.render() + " evaluated at q = 1";
  return r;
}

inline Report eq16(const Params& p) {
  const long n = arg(p, "n");
  auto [lhs, rhs] = reflection_pair(n);
  return compare(p, lhs, rhs, "beta_{n,1/q}(1-x) vs (-1)^n q^n beta_{n,q}(x) in T = q^x");
}

inline Report eq17(const Params& p) {
  Report r = beta_at_two_identity(arg(p, "n"));
  r.params = p;
  return r;
}

inline Report eq18(const Params& p) {
  const long n = arg(p, "n");
  std::string notes = n > 1 ? "closed form q^2 beta_{n,1/q} + (n+1) - q" : "small-n value from direct moments";
  return compare(p, integral_one_minus_x_pow(n), integral_one_minus_x_pow_by_moments(n), notes);
}

inline Report thm4(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  std::string branch = n < k ? "n<k" : n == k ? (k == 0 ? "n=k=0" : "n=k") : n == k + 1 ? "n=k+1" : "n>k+1";
  return compare(p, bernstein_double_integral(k, n), bernstein_double_integral_by_moments(k, n),
                 "branch " + branch + "; the x1-integral uses exponent k, as the basis definition requires");
}

inline Report thm5_literal(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n");
  return compare(p, rat(binomial(n, k)) * carlitz_beta(k), reflected_moment_expansion(k),
                 "C(n,k) beta_k vs reflected-moment expansion");
}

inline Report thm5_corrected(const Params& p) {
  const long k = arg(p, "k");
  return compare(p, carlitz_beta(k), reflected_moment_expansion(k), "beta_k vs reflected-moment expansion");
}

// Asserts that the s-fold right-hand side coincides with the single-index one at sk.
inline std::string structural_reduction_note(long s, long k) {
  if (!(reflected_moment_expansion_scaled(s, k) == reflected_moment_expansion(s * k)))
    throw std::logic_error("s-fold right-hand side does not reduce to the single-index form");
  return "right-hand side equals the single-index form at m = " + std::to_string(s * k);
}

inline Report thm6_literal(const Params& p) {
  const long k = arg(p, "k"), n = arg(p, "n"), m = arg(p, "m");
  return compare(p, rat(binomial(n, k) * binomial(m, k)) * carlitz_beta(k), reflected_moment_expansion_scaled(2, k),
                 "C(n,k) C(m,k) beta_k vs expansion at 2k");
}

inline Report thm6_corrected(const Params& p) {
  const long k = arg(p, "k");
  return compare(p, carlitz_beta(2 * k), reflected_moment_expansion_scaled(2, k), structural_reduction_note(2, k));
}

inline std::vector<long> thm7_degrees(long s, long k, long pattern) {
  std::vector<long> ns;
  for (long i = 1; i <= s; ++i) ns.push_back(k + (pattern * i) % 3);
  return ns;
}

inline Report thm7_literal(const Params& p) {
  const long s = arg(p, "s"), k = arg(p, "k"), pattern = arg(p, "pattern");
  BigInt prefactor = 1;
  std::string degrees;
  for (long n : thm7_degrees(s, k, pattern)) {
    prefactor *= binomial(n, k);
    degrees += (degrees.empty() ? "" : ",") + std::to_string(n);
  }
  return compare(p, rat(prefactor) * carlitz_beta(s * k), reflected_moment_expansion_scaled(s, k),
                 "n_i = (" + degrees + "); prod C(n_i,k) beta_sk vs expansion at sk");
}

inline Report thm7_corrected(const Params& p) {
  const long s = arg(p, "s"), k = arg(p, "k");
  return compare(p, carlitz_beta(s * k), reflected_moment_expansion_scaled(s, k), structural_reduction_note(s, k));
}

/// Runs the literal form, then the corrected form when the literal one fails.
inline Report literal_then_corrected(const Params& p, const std::function<Report(const Params&)>& literal,
                                     const std::function<Report(const Params&)>& corrected) {
  Report lit = literal(p);
  if (lit.status != Status::Failed) return lit;
  Report cor = corrected(p);
  cor.params = p;
  cor.notes = "stated form fails (" + lit.lhs + " vs " + lit.rhs + "); " + cor.notes;
  cor.status = cor.status == Status::Verified ? Status::CorrectedFormVerified : Status::Failed;
  return cor;
}

// -- p-adic delegations ------------------------------------------------------

inline Report eq4_padic(const Params& p) {
  return to_report(padic_check_eq4(arg(p, "n"), arg(p, "x0"), arg(p, "p"), arg(p, "q0"),
                                   static_cast<int>(arg(p, "level")), static_cast<int>(arg(p, "digits"))),
                   "eq4-padic");
}

inline Report eq15_padic(const Params& p) {
  return check_eq15_padic(arg(p, "n"), arg(p, "x0"), arg(p, "p"), arg(p, "q0"), static_cast<int>(arg(p, "level")),
                          static_cast<int>(arg(p, "digits")));
}

inline Report eq18_padic(const Params& p) {
  return check_eq18_padic(arg(p, "n"), arg(p, "p"), arg(p, "q0"), static_cast<int>(arg(p, "level")),
                          static_cast<int>(arg(p, "digits")));
}

// -- sweeps ------------------------------------------------------------------

inline std::vector<Params> grid1(const std::string& a, long lo, long hi) {
  std::vector<Params> out;
  for (long i = lo; i <= hi; ++i) out.push_back({{a, i}});
  return out;
}

/// (outer, inner) pairs with inner in [inner_lo(outer), inner_hi(outer)].
inline std::vector<Params> grid2(const std::string& outer, long lo, long hi, const std::string& inner,
                                 const std::function<long(long)>& inner_lo, const std::function<long(long)>& inner_hi) {
  std::vector<Params> out;
  for (long o = lo; o <= hi; ++o)
    for (long i = inner_lo(o); i <= inner_hi(o); ++i) out.push_back({{outer, o}, {inner, i}});
  return out;
}

inline std::vector<Params> thm5_points() {
  std::vector<Params> out;
  for (long k = 0; k <= 8; ++k)
    for (long n : {k, k + 2, k + 3}) out.push_back({{"k", k}, {"n", n}});
  return out;
}

inline std::vector<Params> thm6_points() {
  std::vector<Params> out;
  for (long k = 0; k <= 3; ++k)
    for (long n = k; n <= k + 2; ++n)
      for (long m = k; m <= k + 2; ++m) out.push_back({{"k", k}, {"m", m}, {"n", n}});
  return out;
}

inline std::vector<Params> thm7_points() {
  std::vector<Params> out;
  for (long s = 1; s <= 4; ++s)
    for (long k = 0; k <= 2; ++k)
      for (long pattern = 0; pattern <= 2; ++pattern) out.push_back({{"k", k}, {"pattern", pattern}, {"s", s}});
  return out;
}

inline std::vector<Params> padic_points(bool with_x0, long n_lo, long n_hi, long x0_hi, long level) {
  std::vector<Params> out;
  for (long p : {3L, 5L})
    for (long n = n_lo; n <= n_hi; ++n)
      for (long x0 = 0; x0 <= (with_x0 ? x0_hi : 0); ++x0) {
        Params pt{{"digits", 12}, {"level", level}, {"n", n}, {"p", p}, {"q0", p + 1}};
        if (with_x0) pt["x0"] = x0;
        out.push_back(pt);
      }
  return out;
}

inline std::vector<ParamSpec> padic_specs(bool with_x0, long n_lo) {
  std::vector<ParamSpec> s{{"digits", 1, 64}, {"level", 1, 8}, {"n", n_lo, 12}, {"p", 2, 97}, {"q0", -1000000, 1000000}};
  if (with_x0) s.push_back({"x0", 0, 10});
  return s;
}

}  // namespace checks

inline const std::vector<IdentityEntry>& registry() {
  using namespace checks;
  static const std::vector<IdentityEntry> entries = [] {
    auto upto = [](long v) { return v; };
    auto zero = [](long) { return 0L; };
    std::vector<IdentityEntry> e;
    e.push_back({"beta-classical", "beta_{n,q} at q = 1 equals the classical Bernoulli number B_n", Mode::ExactRatQ,
                 {{"n", 0, 40}}, [] { return grid1("n", 0, 20); }, nullptr, beta_classical});
    e.push_back({"thm1", "(1-Y) B_{k,n} + X B_{k-1,n} = B_{k,n+1}", Mode::ExactMPoly, {{"k", 0, 40}, {"n", 0, 40}},
                 [=] { return grid2("n", 0, 11, "k", zero, [](long n) { return n + 1; }); },
                 [](const Params& p) { return arg(p, "k") <= arg(p, "n") + 1; }, thm1});
    e.push_back({"lemma2-sym", "d/dX B_{k,n} = n B_{k-1,n-1} and d/dY B_{k,n} = -n B_{k,n-1}", Mode::ExactMPoly,
                 {{"k", 0, 40}, {"n", 1, 40}}, [=] { return grid2("n", 1, 10, "k", zero, upto); },
                 [](const Params& p) { return arg(p, "k") <= arg(p, "n"); }, lemma2_sym});
    e.push_back({"lemma2-num", "finite differences of B_{k,n} match the log(q) chain-rule formulas",
                 Mode::NumericReal, {{"k", 0, 20}, {"n", 1, 20}, {"var", 1, 2}},
                 [] {
                   std::vector<Params> out;
                   for (auto [k, n] : {std::pair{1L, 3L}, std::pair{2L, 5L}})
                     for (long v : {1L, 2L}) out.push_back({{"k", k}, {"n", n}, {"var", v}});
                   return out;
                 },
                 [](const Params& p) { return arg(p, "k") <= arg(p, "n"); }, lemma2_num});
    e.push_back({"eq10", "B_{n-k,n}(1-x2, 1-x1 | 1/q) = B_{k,n}(x1, x2 | q)", Mode::ExactMPoly,
                 {{"k", 0, 40}, {"n", 0, 40}}, [=] { return grid2("n", 0, 10, "k", zero, upto); },
                 [](const Params& p) { return arg(p, "k") <= arg(p, "n"); }, eq10});
    e.push_back({"eq12", "sum_k B_{k,n} = (1+X-Y)^n", Mode::ExactMPoly, {{"n", 0, 40}},
                 [] { return grid1("n", 0, 10); }, nullptr, eq12});
    e.push_back({"eq12-num", "operator images of 1 and t agree with their closed forms numerically",
                 Mode::NumericReal, {{"n", 1, 2000}}, [] { return grid1("n", 1, 10); }, nullptr, eq12_num});
    e.push_back({"moment1", "sum_k (k/n) B_{k,n} = X (1+X-Y)^{n-1}", Mode::ExactMPoly, {{"n", 1, 40}},
                 [] { return grid1("n", 1, 10); }, nullptr, moment1});
    e.push_back({"eq13", "sum_k (k/n)^2 B_{k,n} closed form, and its X = Y specialization", Mode::ExactMPoly,
                 {{"n", 2, 40}}, [] { return grid1("n", 2, 10); }, nullptr, eq13});
    e.push_back({"eq13-num", "operator image of t^2 at x1 = x2 equals ((n-1)/n)[x]^2 + [x]/n", Mode::NumericReal,
                 {{"n", 2, 100000}},
                 [] { return std::vector<Params>{{{"n", 10}}, {{"n", 100}}, {{"n", 1000}}}; }, nullptr, eq13_num});
    e.push_back({"eq14", "((n-k)/n) B_{k,n} + ((k+1)/n) B_{k+1,n} = (1+X-Y) B_{k,n-1}", Mode::ExactMPoly,
                 {{"k", 0, 40}, {"n", 1, 40}}, [=] { return grid2("n", 1, 12, "k", zero, [](long n) { return n - 1; }); },
                 [](const Params& p) { return arg(p, "k") < arg(p, "n"); }, eq14});
    e.push_back({"thm3", "sum_{k>=j} (C(k,j)/C(n,j)) B_{k,n} = X^j (1+X-Y)^{n-j}", Mode::ExactMPoly,
                 {{"j", 0, 40}, {"n", 0, 40}}, [=] { return grid2("n", 0, 10, "j", zero, upto); },
                 [](const Params& p) { return arg(p, "j") <= arg(p, "n"); }, thm3});
    e.push_back({"lincomb", "B_{k,n} = (X/Y)^k sum_{l=k}^n C(l,k) C(n,l) (-1)^(l-k) Y^l", Mode::ExactMPoly,
                 {{"k", 0, 40}, {"n", 0, 40}}, [=] { return grid2("n", 0, 8, "k", zero, upto); },
                 [](const Params& p) { return arg(p, "k") <= arg(p, "n"); }, lincomb});
    e.push_back({"stirling", "[x]_q^j expands through Carlitz q-Stirling numbers S_q(j,k)", Mode::ExactMPoly,
                 {{"j", 0, 20}}, [] { return grid1("j", 0, 6); }, nullptr, stirling});
    e.push_back({"stirling-literal", "[x]_q^j expansion with the stated index pattern S_q(k, j-k)", Mode::ExactMPoly,
                 {{"j", 0, 20}}, [] { return grid1("j", 0, 6); }, nullptr, stirling_literal});
    e.push_back({"genfun", "t^n/n! coefficients of (tX)^k exp(t(1-Y))/k! are B_{k,n}", Mode::ExactMPoly,
                 {{"k", 0, 20}}, [] { return grid1("k", 0, 4); }, nullptr, genfun});
    e.push_back({"eq16", "beta_{n,1/q}(1-x) = (-1)^n q^n beta_{n,q}(x)", Mode::ExactMPoly, {{"n", 0, 30}},
                 [] { return grid1("n", 0, 10); }, nullptr, eq16});
    e.push_back({"eq17", "beta_{n,q}(2) = (n+1) - 1/q + beta_{n,q}/q^2 for n > 1", Mode::ExactRatQ, {{"n", 2, 30}},
                 [] { return grid1("n", 2, 10); }, nullptr, eq17});
    e.push_back({"eq18", "integral of [1-x]_{1/q}^n dmu_q: closed form vs moment expansion", Mode::ExactRatQ,
                 {{"n", 0, 30}}, [] { return grid1("n", 0, 12); }, nullptr, eq18});
    e.push_back({"thm4", "double integral of B_{k,n}: branchwise closed form vs full moment expansion",
                 Mode::ExactRatQ, {{"k", 0, 30}, {"n", 0, 30}},
                 [=] { return grid2("n", 0, 10, "k", zero, [](long) { return 10L; }); }, nullptr, thm4});
    e.push_back({"thm5-literal", "C(n,k) beta_k equals the reflected-moment expansion at k", Mode::ExactRatQ,
                 {{"k", 0, 20}, {"n", 0, 30}}, thm5_points, nullptr, thm5_literal});
    e.push_back({"thm5-corrected", "beta_k equals the reflected-moment expansion at k", Mode::ExactRatQ,
                 {{"k", 0, 20}}, [] { return grid1("k", 0, 8); }, nullptr, thm5_corrected});
    e.push_back({"thm5", "stated form first, then the prefactor-free form", Mode::ExactRatQ,
                 {{"k", 0, 20}, {"n", 0, 30}}, thm5_points, nullptr,
                 [](const Params& p) { return literal_then_corrected(p, thm5_literal, thm5_corrected); }});
    e.push_back({"thm6-literal", "C(n,k) C(m,k) beta_k equals the reflected-moment expansion at 2k",
                 Mode::ExactRatQ, {{"k", 0, 10}, {"m", 0, 20}, {"n", 0, 20}}, thm6_points, nullptr, thm6_literal});
    e.push_back({"thm6-corrected", "beta_{2k} equals the reflected-moment expansion at 2k", Mode::ExactRatQ,
                 {{"k", 0, 10}}, [] { return grid1("k", 0, 3); }, nullptr, thm6_corrected});
    e.push_back({"thm6", "stated form first, then beta_{2k}", Mode::ExactRatQ,
                 {{"k", 0, 10}, {"m", 0, 20}, {"n", 0, 20}}, thm6_points, nullptr,
                 [](const Params& p) { return literal_then_corrected(p, thm6_literal, thm6_corrected); }});
    e.push_back({"thm7-literal", "prod_i C(n_i,k) beta_sk equals the reflected-moment expansion at sk",
                 Mode::ExactRatQ, {{"k", 0, 5}, {"pattern", 0, 2}, {"s", 1, 6}}, thm7_points, nullptr, thm7_literal});
    e.push_back({"thm7-corrected", "beta_sk equals the reflected-moment expansion at sk", Mode::ExactRatQ,
                 {{"k", 0, 5}, {"s", 1, 6}},
                 [=] { return grid2("s", 1, 4, "k", zero, [](long) { return 2L; }); }, nullptr, thm7_corrected});
    e.push_back({"thm7", "stated form first, then beta_sk without the prefactor", Mode::ExactRatQ,
                 {{"k", 0, 5}, {"pattern", 0, 2}, {"s", 1, 6}}, thm7_points, nullptr,
                 [](const Params& p) { return literal_then_corrected(p, thm7_literal, thm7_corrected); }});
    e.push_back({"eq4-padic", "Riemann sums of [x0+x]_q^n converge p-adically to beta_{n,q}(x0)",
                 Mode::NumericPadic, padic_specs(true, 0), [] { return padic_points(true, 0, 3, 1, 5); }, nullptr,
                 eq4_padic});
    e.push_back({"eq15-padic", "reflection of the q-integral under q -> 1/q, x -> 1-x, by Riemann sums",
                 Mode::NumericPadic, padic_specs(true, 0), [] { return padic_points(true, 0, 3, 2, 4); }, nullptr,
                 eq15_padic});
    e.push_back({"eq18-padic", "Riemann sums of [1-x]_{1/q}^n converge to q^2 beta_{n,1/q} + (n+1) - q",
                 Mode::NumericPadic, padic_specs(false, 2), [] { return padic_points(false, 2, 4, 0, 4); }, nullptr,
                 eq18_padic});
    return e;
  }();
  return entries;
}

inline const IdentityEntry& find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown identity id '" + id + "'");
}

inline void validate_params(const IdentityEntry& e, const Params& params) {
  for (const auto& param : e.params) {
    auto it = params.find(param.name);
    if (it == params.end()) throw std::invalid_argument(e.id + ": missing parameter " + param.name);
    if (it->second < param.lo || it->second > param.hi)
      throw std::invalid_argument(e.id + ": parameter " + param.name + "=" + std::to_string(it->second) +
                                  " outside [" + std::to_string(param.lo) + ", " + std::to_string(param.hi) + "]");
  }
  for (const auto& [name, value] : params) {
    bool known = false;
    for (const auto& param : e.params) known = known || param.name == name;
    if (!known) throw std::invalid_argument(e.id + ": unknown parameter " + name);
  }
  if (e.admits && !e.admits(params)) throw std::invalid_argument(e.id + ": parameters out of range");
}

namespace detail {

inline Report execute(const IdentityEntry& e, const Params& params) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = e.run(params);
  } catch (const std::exception& ex) {
    r = Report{};
    r.status = Status::Error;
    r.notes = ex.what();
  }
  r.id = e.id;
  r.params = params;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// Runs one registered check. Throws std::invalid_argument for an unknown id
/// or out-of-range parameters.
inline Report run_check(const std::string& id, const Params& params) {
  const IdentityEntry& e = find_entry(id);
  validate_params(e, params);
  return detail::execute(e, params);
}

struct SuiteResult {
  std::vector<Report> reports;
  std::vector<Status> expected;
  int verified = 0;
  int corrected = 0;
  int failed = 0;
  int errors = 0;
  int unexpected = 0;  // failed or error where that was not the shipped expectation
  int exit_code = 0;
};

inline bool matches_filter(const std::string& id, const std::string& filter) {
  return filter.empty() || fnmatch(filter.c_str(), id.c_str(), 0) == 0;
}

/// Runs every matching entry over its sweep. Reports come back in registry
/// order whatever the completion order.
inline SuiteResult run_suite(const std::string& filter, unsigned jobs) {
  std::vector<std::pair<const IdentityEntry*, Params>> tasks;
  for (const auto& e : registry())
    if (matches_filter(e.id, filter))
      for (auto& p : e.sweep()) tasks.emplace_back(&e, std::move(p));

  SuiteResult out;
  out.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      out.reports[i] = detail::execute(*tasks[i].first, tasks[i].second);
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : out.reports) {
    const Status want = expected_status(r.id, r.params);
    out.expected.push_back(want);
    switch (r.status) {
      case Status::Verified: ++out.verified; break;
      case Status::CorrectedFormVerified: ++out.corrected; break;
      case Status::Failed: ++out.failed; break;
      case Status::Error: ++out.errors; break;
    }
    if ((r.status == Status::Failed || r.status == Status::Error) && r.status != want) ++out.unexpected;
  }
  out.exit_code = out.unexpected == 0 ? 0 : 1;
  return out;
}

}  // namespace qbern
