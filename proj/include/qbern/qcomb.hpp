#pragma once

// q-integers, q-factorials, Gaussian binomials and Carlitz q-Stirling numbers.

#include <stdexcept>
#include <vector>

#include "qbern/mpoly.hpp"
#include "qbern/poly.hpp"
#include "qbern/ratq.hpp"

namespace qbern {

/// [n]_q = 1 + q + ... + q^{n-1}.
inline PolyQ q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  return PolyQ(std::vector<BigRat>(static_cast<std::size_t>(n), BigRat(1)));
}

/// Cyclotomic polynomial Phi_n, from q^n - 1 = prod_{d | n} Phi_d.
inline PolyQ cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  PolyQ r = PolyQ::monomial(1, static_cast<int>(n)) - PolyQ(1);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) r = exact_div(r, cyclotomic(d));
  return r;
}

inline PolyQ q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  PolyQ r(1);
  for (long i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

/// Gaussian binomial; zero outside 0 <= k <= n.
inline PolyQ q_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return {};
  return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

/// [x]_q = (1 - T)/(1 - q) with T = q^x.
inline MPoly q_number_symbolic() {
  const RatQ inv = RatQ::make(1, PolyQ(1) - PolyQ::q());
  return inv * (MPoly(1) - MPoly::var(Var::T));
}

/// The q-binomial with symbolic upper index x (T = q^x):
/// prod_{i<k} [x - i]_q / [k]_q!, where [x - i]_q = (1 - T q^{-i})/(1 - q).
inline MPoly q_binomial_symbolic(long k) {
  if (k < 0) throw std::invalid_argument("q_binomial_symbolic: k must be nonnegative");
  const RatQ inv = RatQ::make(1, PolyQ(1) - PolyQ::q());
  MPoly r(1);
  for (long i = 0; i < k; ++i) {
    const RatQ shift = RatQ::q().pow(-i);
    r *= inv * (MPoly(1) - shift * MPoly::var(Var::T));
  }
  return RatQ::make(1, q_factorial(k)) * r;
}

/// Carlitz q-Stirling numbers of the second kind:
/// S(n, k) = S(n-1, k-1) + [k]_q S(n-1, k), S(0, 0) = 1.
/// With this normalization [x]_q^n = sum_k q^{C(k,2)} [x choose k]_q [k]_q! S(n, k).
inline RatQ q_stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_stirling2: arguments must be nonnegative");
  if (k > n) return {};
  std::vector<PolyQ> row{PolyQ(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<PolyQ> next(static_cast<std::size_t>(m) + 1);
    for (long j = 1; j <= m; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      PolyQ v = row[uj - 1];
      if (j < m) v += q_int(j) * row[uj];
      next[uj] = std::move(v);
    }
    row = std::move(next);
  }
  return RatQ(row[static_cast<std::size_t>(k)]);
}

}  // namespace qbern
