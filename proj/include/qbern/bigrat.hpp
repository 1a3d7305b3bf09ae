#pragma once

// Arbitrary-precision integers and rationals (GMP), plus the few integer
// combinatorics helpers shared by every layer.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qbern {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator in rational");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline BigRat ratio(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

inline std::string to_string(const BigRat& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace qbern
