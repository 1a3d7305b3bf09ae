#pragma once

// Carlitz q-Bernoulli numbers and polynomials, their reflection and shift
// identities, and closed forms for q-integrals of powers of [1-x]_{1/q}.
//
// Integrals are taken against the bosonic q-measure, so every value here is
// built from the moments  integral [x]_q^n dmu_q = beta_n.

#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbern/mpoly.hpp"
#include "qbern/qcomb.hpp"
#include "qbern/ratq.hpp"
#include "qbern/report.hpp"

namespace qbern {

/// Grow-only memo of beta_{n,q} and beta_{n,1/q}. Extension and reads are
/// serialized by a mutex; returned values are copies.
///
/// Internally beta_k = N_k / L_k with L_k = Phi_2 Phi_3 ... Phi_{k+1}, the lcm
/// of [2]_q, ..., [k+1]_q. Keeping every numerator over this fixed chain of
/// denominators turns the recurrence into polynomial arithmetic, and since
/// each Phi_d (d >= 2) is palindromic the q -> 1/q image is a coefficient
/// reversal.
class BetaTable {
 public:
  static BetaTable& shared() {
    static BetaTable table;
    return table;
  }

  RatQ beta(long n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return betas_[static_cast<std::size_t>(n)];
  }

  RatQ beta_qinv(long n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return betas_qinv_[static_cast<std::size_t>(n)];
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return betas_.size();
  }

 private:
  BetaTable() {
    betas_.emplace_back(1);
    betas_qinv_.emplace_back(1);
    nums_.emplace_back(1);
    lcms_.emplace_back(1);
    phis_ = {PolyQ(), cyclotomic(1)};
  }

  const PolyQ& phi(long d) {
    while (static_cast<long>(phis_.size()) <= d) {
      const long m = static_cast<long>(phis_.size());
      PolyQ r = PolyQ::monomial(1, static_cast<int>(m)) - PolyQ(1);
      for (long e = 1; e < m; ++e)
        if (m % e == 0) r = exact_div(r, phis_[static_cast<std::size_t>(e)]);
      phis_.push_back(std::move(r));
    }
    return phis_[static_cast<std::size_t>(d)];
  }

  // Solves q (q beta + 1)^k - beta_k = [k = 1] for beta_k; the beta_k term
  // carries the coefficient q^{k+1} - 1 = (q - 1)[k+1]_q.
  void extend(long n) {
    if (n < 0) throw std::invalid_argument("q-Bernoulli index must be nonnegative");
    for (long k = static_cast<long>(betas_.size()); k <= n; ++k) {
      // R = sum_{i<k} C(k,i) q^i N_i L_{k-1}/L_i, accumulated Horner-style.
      PolyQ r;
      for (long i = 0; i < k; ++i) {
        if (i >= 1) r = r * phi(i + 1);
        r += BigRat(binomial(k, i)) * (PolyQ::monomial(1, static_cast<int>(i)) * nums_[static_cast<std::size_t>(i)]);
      }
      const PolyQ& prev_lcm = lcms_.back();
      PolyQ a = PolyQ::q() * r;
      a = (k == 1 ? prev_lcm : PolyQ()) - a;
      const PolyQ e = exact_div(PolyQ::monomial(1, static_cast<int>(k + 1)) - PolyQ(1), phi(k + 1));
      auto [num, rem] = divmod(a, e);
      if (!rem.is_zero())
        throw std::logic_error("beta_" + std::to_string(k) + " has a denominator outside [2]..[k+1]");
      PolyQ lcm = prev_lcm * phi(k + 1);

      // L_k is a product of distinct irreducible Phi_d, so gcd(N_k, L_k) is
      // the product of those Phi_d that divide N_k.
      PolyQ rn = num, rl = lcm;
      if (num.is_zero()) rl = PolyQ(1);
      for (long d = 2; !num.is_zero() && d <= k + 1; ++d) {
        auto [quo, left] = divmod(rn, phi(d));
        if (!left.is_zero()) continue;
        rn = std::move(quo);
        rl = exact_div(rl, phi(d));
      }
      betas_.push_back(RatQ::from_coprime(rn, rl));
      betas_qinv_.push_back(num.is_zero() ? RatQ() : reflect(rn, rl));
      nums_.push_back(std::move(num));
      lcms_.push_back(std::move(lcm));
    }
  }

  // N(1/q)/L(1/q) for coprime N, L with L a product of Phi_d, d >= 2.
  static RatQ reflect(const PolyQ& num, const PolyQ& lcm) {
    const int dn = num.degree(), dl = lcm.degree(), top = std::max(dn, dl);
    std::vector<BigRat> c(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= dn; ++i) c[static_cast<std::size_t>(top - i)] = num.coeff(i);
    return RatQ::from_coprime(PolyQ(std::move(c)), PolyQ::monomial(1, top - dl) * lcm);
  }

  std::mutex mutex_;
  std::vector<RatQ> betas_;
  std::vector<RatQ> betas_qinv_;
  std::vector<PolyQ> nums_;   // N_k
  std::vector<PolyQ> lcms_;   // L_k
  std::vector<PolyQ> phis_;   // Phi_d, index d
};

inline RatQ carlitz_beta(long n) { return BetaTable::shared().beta(n); }
inline RatQ carlitz_beta_qinv(long n) { return BetaTable::shared().beta_qinv(n); }

struct BetaPoly {
  long n = 0;
  MPoly expr;  // polynomial in T = q^x
};

/// beta_{n,q}(x) = sum_i C(n,i) q^{ix} beta_i [x]_q^{n-i}, written in T = q^x.
inline BetaPoly beta_poly(long n) {
  if (n < 0) throw std::invalid_argument("beta_poly: n must be nonnegative");
  const MPoly qx = q_number_symbolic();
  MPoly expr;
  for (long i = 0; i <= n; ++i) {
    RatQ c = RatQ(BigRat(binomial(n, i))) * carlitz_beta(i);
    expr += c * MPoly::var(Var::T, static_cast<int>(i)) * qx.pow(static_cast<unsigned>(n - i));
  }
  return {n, std::move(expr)};
}

/// beta_{n,q}(x) at a nonnegative integer x, via T = q^x.
inline RatQ beta_poly_at_int(long n, long x) {
  if (x < 0) throw std::invalid_argument("beta_poly_at_int: x must be nonnegative");
  return beta_poly(n).expr.subst(Var::T, MPoly(RatQ(PolyQ::monomial(1, static_cast<int>(x))))).constant_value();
}

/// The same value summed directly from the moments with [x]_q as a polynomial.
inline RatQ beta_poly_at_int_by_moments(long n, long x) {
  if (n < 0 || x < 0) throw std::invalid_argument("beta_poly_at_int_by_moments: negative argument");
  const RatQ qx(q_int(x));
  const RatQ qpow(PolyQ::monomial(1, static_cast<int>(x)));
  RatQ sum;
  for (long m = 0; m <= n; ++m)
    sum += RatQ(BigRat(binomial(n, m))) * qpow.pow(m) * carlitz_beta(m) * qx.pow(n - m);
  return sum;
}

/// integral [1-x]_{1/q}^n dmu_q(x): 1 for n = 0, 1 + 1/[2]_q for n = 1 and
/// q^2 beta_{n,1/q} + (n+1) - q for n > 1.
inline RatQ integral_one_minus_x_pow(long n) {
  if (n < 0) throw std::invalid_argument("integral_one_minus_x_pow: n must be nonnegative");
  if (n == 0) return RatQ(1);
  if (n == 1) return RatQ(1) - carlitz_beta(1);
  const RatQ q = RatQ::q();
  return q * q * carlitz_beta_qinv(n) + RatQ(n + 1) - q;
}

/// Same integral by the binomial expansion of (1 - [x]_q)^n into moments.
inline RatQ integral_one_minus_x_pow_by_moments(long n) {
  if (n < 0) throw std::invalid_argument("integral_one_minus_x_pow_by_moments: n must be nonnegative");
  RatQ sum;
  for (long j = 0; j <= n; ++j) sum += RatQ(BigRat(binomial(n, j) * sign_pow(j))) * carlitz_beta(j);
  return sum;
}

/// Both sides of beta_{n,1/q}(1-x) = (-1)^n q^n beta_{n,q}(x) as polynomials in T.
/// Under q -> 1/q, x -> 1-x the variable T = q^x becomes (1/q)^{1-x} = T/q.
inline std::pair<MPoly, MPoly> reflection_pair(long n) {
  const MPoly base = beta_poly(n).expr;
  const RatQ qinv = RatQ::q().inverse();
  MPoly lhs = base.map_coefficients([](const RatQ& c) { return c.subst_qinv(); })
                  .subst(Var::T, qinv * MPoly::var(Var::T));
  MPoly rhs = RatQ(sign_pow(n)) * RatQ::q().pow(n) * base;
  return {std::move(lhs), std::move(rhs)};
}

/// beta_{n,q}(2) = (n+1) - 1/q + beta_{n,q}/q^2, for n > 1.
inline Report beta_at_two_identity(long n) {
  if (n <= 1) throw std::invalid_argument("identity stated only for n>1");
  const RatQ q = RatQ::q();
  const RatQ lhs = beta_poly_at_int(n, 2);
  const RatQ rhs = RatQ(n + 1) - q.inverse() + carlitz_beta(n) / (q * q);
  Report r;
  r.id = "eq17";
  r.params = {{"n", n}};
  r.status = lhs == rhs ? Status::Verified : Status::Failed;
  r.lhs = lhs.render();
  r.rhs = rhs.render();
  return r;
}

/// Double q-integral of B_{k,n}(x1, x2 | q) in closed form, branch by branch.
inline RatQ bernstein_double_integral(long k, long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("bernstein_double_integral: negative index");
  if (n < k) return {};
  if (n == k) return carlitz_beta(k);  // includes n = k = 0 -> 1
  const RatQ prefactor = RatQ(BigRat(binomial(n, k))) * carlitz_beta(k);
  if (n == k + 1) return prefactor * integral_one_minus_x_pow(1);
  const RatQ q = RatQ::q();
  return prefactor * (q * q * carlitz_beta_qinv(n - k) + RatQ(n - k + 1) - q);
}

/// Same double integral expanded fully into moments:
/// C(n,k) beta_k sum_j C(n-k, j) (-1)^j beta_j.
inline RatQ bernstein_double_integral_by_moments(long k, long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("bernstein_double_integral_by_moments: negative index");
  if (n < k) return {};
  RatQ inner;
  for (long j = 0; j <= n - k; ++j) inner += RatQ(BigRat(binomial(n - k, j) * sign_pow(j))) * carlitz_beta(j);
  return RatQ(BigRat(binomial(n, k))) * carlitz_beta(k) * inner;
}

/// Double q-integral of prod_i B_{k,n_i}: (prod_i C(n_i,k)) beta_{sk} times the
/// integral of [1-x]_{1/q}^{sum n_i - sk}; zero when some n_i < k.
inline RatQ bernstein_product_double_integral(long k, std::span<const long> ns) {
  if (k < 0 || ns.empty()) throw std::invalid_argument("bernstein_product_double_integral: bad arguments");
  BigInt prefactor = 1;
  long total = 0;
  for (long n : ns) {
    if (n < k) return {};
    prefactor *= binomial(n, k);
    total += n;
  }
  const long s = static_cast<long>(ns.size());
  return RatQ(BigRat(prefactor)) * carlitz_beta(s * k) * integral_one_minus_x_pow(total - s * k);
}

/// beta_m recovered from the reflected moments:
/// 1 - m - m/[2]_q + sum_{l=0}^{m-2} C(m,l) (-1)^{m+l} (q^2 beta_{m-l,1/q} + m-l+1 - q).
inline RatQ reflected_moment_expansion(long m) {
  if (m < 0) throw std::invalid_argument("reflected_moment_expansion: m must be nonnegative");
  const RatQ q = RatQ::q();
  const RatQ q2 = RatQ::make(q_int(2), 1);
  RatQ sum = RatQ(1 - m) - RatQ(m) / q2;
  for (long l = 0; l <= m - 2; ++l) {
    RatQ term = q * q * carlitz_beta_qinv(m - l) + RatQ(m - l + 1) - q;
    sum += RatQ(BigRat(binomial(m, l) * sign_pow(m + l))) * term;
  }
  return sum;
}

/// The s-fold form 1 - sk - sk/[2]_q + sum_{l=0}^{sk-2} C(sk,l)(-1)^{sk+l}(...),
/// assembled from the reflected integrals themselves rather than from
/// reflected_moment_expansion.
inline RatQ reflected_moment_expansion_scaled(long s, long k) {
  if (s < 1 || k < 0) throw std::invalid_argument("reflected_moment_expansion_scaled: bad arguments");
  const long sk = s * k;
  RatQ sum = RatQ(1) - RatQ(sk) * integral_one_minus_x_pow(1);
  for (long l = 0; l + 2 <= sk; ++l)
    sum += RatQ(BigRat(binomial(sk, l) * sign_pow(sk + l))) * integral_one_minus_x_pow(sk - l);
  return sum;
}

}  // namespace qbern
