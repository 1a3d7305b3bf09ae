#pragma once

// Fixed-precision p-adic arithmetic and Riemann sums for the bosonic
// p-adic q-integral
//
//   I_q(f) = lim_N  [p^N]_q^{-1}  sum_{0 <= x < p^N} f(x) q^x,
//
// evaluated at rational integers q0 = 1 (mod p).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbern/bigrat.hpp"
#include "qbern/carlitz.hpp"
#include "qbern/report.hpp"

namespace qbern {

inline BigInt ipow(const BigInt& base, long e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

/// Exponent of p in z; z must be nonzero.
inline int p_valuation(BigInt z, const BigInt& p) {
  if (z == 0) throw std::domain_error("valuation of zero");
  return static_cast<int>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error(a.get_str() + " is not invertible modulo " + m.get_str());
  return r;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element of Z_p known modulo p^precision.
class PadicInt {
 public:
  PadicInt(long p, int precision, const BigInt& value) : p_(p), precision_(precision) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (precision < 0) throw std::invalid_argument("negative p-adic precision");
    residue_ = mod_floor(value, modulus());
  }

  long p() const { return p_; }
  int precision() const { return precision_; }
  const BigInt& residue() const { return residue_; }
  BigInt modulus() const { return ipow(p_, precision_); }

  bool is_zero() const { return residue_ == 0; }
  /// v_p of the residue; equals the precision when indistinguishable from 0.
  int valuation() const { return is_zero() ? precision_ : p_valuation(residue_, BigInt(p_)); }

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    return {a.p_, common(a, b), BigInt(a.residue_ + b.residue_)};
  }
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    return {a.p_, common(a, b), BigInt(a.residue_ - b.residue_)};
  }
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    return {a.p_, common(a, b), BigInt(a.residue_ * b.residue_)};
  }
  PadicInt operator-() const { return {p_, precision_, BigInt(-residue_)}; }
  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }

  /// Quotient a/b. Dividing by b with valuation v consumes v digits.
  friend PadicInt divide(const PadicInt& a, const PadicInt& b) {
    const int prec = common(a, b);
    if (b.is_zero()) throw std::domain_error("p-adic division by a value indistinguishable from 0");
    const int v = b.valuation();
    if (!a.is_zero() && a.valuation() < v) throw std::domain_error("quotient is not a p-adic integer");
    const int out = prec - v;
    const BigInt pv = ipow(a.p_, v);
    const BigInt m = ipow(a.p_, out);
    const BigInt num = a.residue_ / pv;
    const BigInt unit = b.residue_ / pv;
    return {a.p_, out, BigInt(num * inverse_mod(unit, m))};
  }

  PadicInt inverse() const { return divide(PadicInt(p_, precision_, 1), *this); }

  std::string render() const {
    return residue_.get_str() + " (mod " + std::to_string(p_) + "^" + std::to_string(precision_) + ")";
  }

 private:
  static int common(const PadicInt& a, const PadicInt& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mixing p-adic integers for different primes");
    return std::min(a.precision_, b.precision_);
  }

  long p_;
  int precision_;
  BigInt residue_;
};

/// Element of Q_p known modulo p^abs_precision, stored as p^valuation * unit.
/// Zero is represented with unit 0 and valuation equal to abs_precision.
class Padic {
 public:
  static Padic zero(long p, int abs_precision) {
    Padic z;
    z.p_ = p;
    z.val_ = abs_precision;
    z.abs_ = abs_precision;
    return z;
  }

  /// p^v * x known modulo p^abs_precision.
  static Padic from_scaled(long p, int v, const BigInt& x, int abs_precision) {
    if (abs_precision <= v) return zero(p, abs_precision);
    const BigInt rel_mod = ipow(p, abs_precision - v);
    BigInt r = mod_floor(x, rel_mod);
    if (r == 0) return zero(p, abs_precision);
    const int w = p_valuation(r, BigInt(p));
    Padic out;
    out.p_ = p;
    out.val_ = v + w;
    out.abs_ = abs_precision;
    out.unit_ = mod_floor(BigInt(r / ipow(p, w)), ipow(p, abs_precision - out.val_));
    return out;
  }

  static Padic from_integer(const PadicInt& a) { return from_scaled(a.p(), 0, a.residue(), a.precision()); }

  static Padic from_rational(const BigRat& r, long p, int abs_precision) {
    if (r == 0) return zero(p, abs_precision);
    BigInt num = r.get_num(), den = r.get_den();
    const BigInt bp(p);
    const int vn = p_valuation(num, bp), vd = p_valuation(den, bp);
    num /= ipow(p, vn);
    den /= ipow(p, vd);
    const int v = vn - vd;
    if (abs_precision <= v) return zero(p, abs_precision);
    const BigInt m = ipow(p, abs_precision - v);
    return from_scaled(p, v, BigInt(num * inverse_mod(den, m)), abs_precision);
  }

  long p() const { return p_; }
  bool is_zero() const { return unit_ == 0; }
  int valuation() const { return val_; }
  int abs_precision() const { return abs_; }
  int rel_precision() const { return abs_ - val_; }
  const BigInt& unit() const { return unit_; }

  std::optional<PadicInt> to_integer() const {
    if (val_ < 0) return std::nullopt;
    return PadicInt(p_, abs_, BigInt(unit_ * ipow(p_, is_zero() ? 0 : val_)));
  }

  Padic operator-() const {
    Padic r = *this;
    if (!is_zero()) r.unit_ = mod_floor(BigInt(-unit_), ipow(p_, rel_precision()));
    return r;
  }

  friend Padic operator+(const Padic& a, const Padic& b) {
    check(a, b);
    const int m = std::min(a.val_, b.val_);
    const int abs = std::min(a.abs_, b.abs_);
    BigInt x = a.unit_ * ipow(a.p_, a.val_ - m) + b.unit_ * ipow(a.p_, b.val_ - m);
    return from_scaled(a.p_, m, x, abs);
  }
  friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

  friend Padic operator*(const Padic& a, const Padic& b) {
    check(a, b);
    if (a.is_zero() && b.is_zero()) return zero(a.p_, a.abs_ + b.abs_);
    if (a.is_zero()) return zero(a.p_, a.abs_ + b.val_);
    if (b.is_zero()) return zero(a.p_, b.abs_ + a.val_);
    const int v = a.val_ + b.val_;
    const int rel = std::min(a.rel_precision(), b.rel_precision());
    return from_scaled(a.p_, v, BigInt(a.unit_ * b.unit_), v + rel);
  }

  friend Padic operator/(const Padic& a, const Padic& b) {
    check(a, b);
    if (b.is_zero()) throw std::domain_error("p-adic division by a value indistinguishable from 0");
    if (a.is_zero()) return zero(a.p_, a.abs_ - b.val_);
    const int v = a.val_ - b.val_;
    const int rel = std::min(a.rel_precision(), b.rel_precision());
    const BigInt m = ipow(a.p_, rel);
    return from_scaled(a.p_, v, BigInt(a.unit_ * inverse_mod(b.unit_, m)), v + rel);
  }

  /// `unit*p^v+O(p^abs)`, or `O(p^abs)` for zero.
  std::string render() const {
    const std::string ps = std::to_string(p_);
    std::string big_o = "O(" + ps + "^" + std::to_string(abs_) + ")";
    if (is_zero()) return big_o;
    std::string s = unit_.get_str();
    if (val_ != 0) s += "*" + ps + "^" + std::to_string(val_);
    return s + "+" + big_o;
  }

 private:
  static void check(const Padic& a, const Padic& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mixing p-adic numbers for different primes");
  }

  long p_ = 2;
  int val_ = 0;
  int abs_ = 0;
  BigInt unit_;
};

// ---------------------------------------------------------------------------
// Riemann sums

enum class QBase { Q, QInv };
enum class Measure { MuQ, MuQInv };

/// f(x) = [offset + direction * x]_{base}^power.
struct Integrand {
  long power = 0;
  long offset = 0;
  int direction = 1;
  QBase base = QBase::Q;

  static Integrand constant_one() { return {0, 0, 1, QBase::Q}; }
  static Integrand power_of_qnum(long n) { return {n, 0, 1, QBase::Q}; }
  /// [1 - x]_{1/q}^n
  static Integrand power_of_one_minus(long n) { return {n, 1, -1, QBase::QInv}; }
  /// [x0 + x]_q^n
  static Integrand shifted_power(long n, long x0) { return {n, x0, 1, QBase::Q}; }
  /// [1 - x0 + x]_{1/q}^n
  static Integrand reflected_shifted_power(long n, long x0) { return {n, 1 - x0, 1, QBase::QInv}; }
};

struct IntegralSpec {
  Integrand integrand;
  Measure measure = Measure::MuQ;
};

inline void validate_padic_params(long p, long q0, int level, int digits) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (q0 == 1 || mod_floor(BigInt(q0 - 1), BigInt(p)) != 0)
    throw std::invalid_argument("q0 must satisfy q0 = 1 (mod p) and q0 != 1");
  if (p == 2 && mod_floor(BigInt(q0 - 1), BigInt(4)) != 0)
    throw std::invalid_argument("for p = 2, q0 must satisfy q0 = 1 (mod 4)");
  if (level < 1 || digits < 1) throw std::invalid_argument("level and digits must be positive");
  if (ipow(p, level) > BigInt(1L << 24)) throw std::invalid_argument("p^level exceeds the summation budget");
}

namespace detail {

// [m]_w modulo `mod` for any integer m, using [m]_w = -w^m [-m]_w for m < 0.
inline BigInt q_int_mod(long m, const BigInt& w, const BigInt& winv, const BigInt& mod) {
  const long a = m >= 0 ? m : -m;
  BigInt sum = 0, pw = 1;
  for (long i = 0; i < a; ++i) {
    sum = mod_floor(BigInt(sum + pw), mod);
    pw = mod_floor(BigInt(pw * w), mod);
  }
  if (m >= 0) return sum;
  BigInt wm;
  mpz_powm_ui(wm.get_mpz_t(), winv.get_mpz_t(), static_cast<unsigned long>(a), mod.get_mpz_t());
  return mod_floor(BigInt(-wm * sum), mod);
}

inline BigInt pow_mod(const BigInt& b, long e, const BigInt& mod) {
  BigInt r;
  if (e >= 0) {
    mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e), mod.get_mpz_t());
  } else {
    const BigInt inv = inverse_mod(b, mod);
    mpz_powm_ui(r.get_mpz_t(), inv.get_mpz_t(), static_cast<unsigned long>(-e), mod.get_mpz_t());
  }
  return r;
}

}  // namespace detail

/// Sum of f(x) w^x over 0 <= x < p^level divided by [p^level]_w, where w is
/// q0 or 1/q0 according to the measure. Both sums are formed modulo
/// p^{digits+level}; the normalizer has valuation exactly `level`, so the
/// quotient carries `digits` digits of relative precision.
inline Padic riemann_sum_integral(const IntegralSpec& integral, long p, long q0, int level, int digits) {
  validate_padic_params(p, q0, level, digits);
  const Integrand& f = integral.integrand;
  if (f.power < 0) throw std::invalid_argument("integrand power must be nonnegative");
  if (f.direction != 1 && f.direction != -1) throw std::invalid_argument("integrand direction must be +1 or -1");

  const BigInt mod = ipow(p, digits + level);
  const BigInt q = mod_floor(BigInt(q0), mod);
  const BigInt qinv = inverse_mod(q, mod);
  const BigInt& w = f.base == QBase::Q ? q : qinv;
  const BigInt& winv = f.base == QBase::Q ? qinv : q;
  const BigInt& ratio = integral.measure == Measure::MuQ ? q : qinv;

  BigInt qnum = detail::q_int_mod(f.offset, w, winv, mod);
  BigInt wm = detail::pow_mod(w, f.offset, mod);
  BigInt sum = 0, norm = 0, weight = 1, term;
  const long count = ipow(p, level).get_si();
  for (long x = 0; x < count; ++x) {
    mpz_powm_ui(term.get_mpz_t(), qnum.get_mpz_t(), static_cast<unsigned long>(f.power), mod.get_mpz_t());
    sum = mod_floor(BigInt(sum + term * weight), mod);
    norm = mod_floor(BigInt(norm + weight), mod);
    weight = mod_floor(BigInt(weight * ratio), mod);
    if (f.direction == 1) {
      qnum = mod_floor(BigInt(qnum + wm), mod);
      wm = mod_floor(BigInt(wm * w), mod);
    } else {
      wm = mod_floor(BigInt(wm * winv), mod);
      qnum = mod_floor(BigInt(qnum - wm), mod);
    }
  }
  const PadicInt s(p, digits + level, sum), d(p, digits + level, norm);
  if (d.valuation() != level)
    throw std::logic_error("normalizer [p^N]_q has unexpected valuation " + std::to_string(d.valuation()));
  return Padic::from_integer(s) / Padic::from_integer(d);
}

/// v_p([p^level]_{q0}).
inline int normalizer_valuation(long p, long q0, int level) {
  validate_padic_params(p, q0, level, 1);
  const BigInt mod = ipow(p, level + 2);
  BigInt norm = 0, w = 1;
  const long count = ipow(p, level).get_si();
  for (long x = 0; x < count; ++x) {
    norm = mod_floor(BigInt(norm + w), mod);
    w = mod_floor(BigInt(w * q0), mod);
  }
  return PadicInt(p, level + 2, norm).valuation();
}

/// Value of an element of Q(q) at q = q0 as a p-adic number.
inline Padic ratq_to_padic(const RatQ& a, long p, long q0, int abs_precision) {
  return Padic::from_rational(a.eval(BigRat(q0)), p, abs_precision);
}

/// beta_{n,q} at q = q0 in Z_p. Throws when the reduced denominator is not a
/// p-adic unit at q0, naming the offending factor.
inline PadicInt beta_padic_value(long n, long p, long q0, int digits) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const RatQ beta = carlitz_beta(n);
  const BigRat value = beta.eval(BigRat(q0));
  if (mod_floor(value.get_den(), BigInt(p)) == 0) {
    std::string factor = beta.den().render();
    const int bound = std::max(beta.den().degree() + 1, 1);
    for (long m = p; m <= bound + p; m += p) {
      PolyQ g = gcd(beta.den(), q_int(m));
      if (g.degree() <= 0) continue;
      const BigRat gv = g.eval(BigRat(q0));
      if (gv != 0 && mod_floor(gv.get_num(), BigInt(p)) == 0) {
        factor = g.render();
        break;
      }
    }
    throw std::domain_error("denominator factor " + factor + " of beta_" + std::to_string(n) +
                            " is not a " + std::to_string(p) + "-adic unit at q = " + std::to_string(q0));
  }
  return *Padic::from_rational(value, p, digits).to_integer();
}

/// beta_{n,q} at q = q0 in Q_p (no unit requirement).
inline Padic beta_padic_number(long n, long p, long q0, int digits) {
  return ratq_to_padic(carlitz_beta(n), p, q0, digits);
}

struct LevelValuation {
  int level = 0;
  int valuation = 0;  // of (Riemann sum - target); the precision cap when exact
  bool exact = false;
};

/// Valuations of the difference may lag the level by at most this much.
inline constexpr int kConvergenceSlack = 0;

struct PadicCheck {
  std::string check;
  Params params;
  std::vector<LevelValuation> levels;
  bool converging = false;
  std::string lhs;  // Riemann value at the final level
  std::string rhs;  // exact target
};

inline bool levels_converge(const std::vector<LevelValuation>& levels) {
  return std::all_of(levels.begin(), levels.end(), [](const LevelValuation& l) {
    return l.exact || l.valuation >= l.level - kConvergenceSlack;
  });
}

namespace detail {

inline LevelValuation level_entry(int level, const Padic& diff) {
  return {level, diff.valuation(), diff.is_zero()};
}

template <class LhsAt, class RhsAt>
PadicCheck run_levels(std::string name, Params params, int max_level, LhsAt lhs_at, RhsAt rhs_at) {
  if (max_level < 1) throw std::invalid_argument("level must be at least 1");
  PadicCheck out;
  out.check = std::move(name);
  out.params = std::move(params);
  for (int level = 1; level <= max_level; ++level) {
    const Padic lhs = lhs_at(level), rhs = rhs_at(level);
    out.levels.push_back(level_entry(level, lhs - rhs));
    if (level == max_level) {
      out.lhs = lhs.render();
      out.rhs = rhs.render();
    }
  }
  out.converging = levels_converge(out.levels);
  return out;
}

}  // namespace detail

/// Riemann sums of [x0 + x]_q^n against beta_{n,q}(x0).
inline PadicCheck padic_check_eq4(long n, long x0, long p, long q0, int max_level, int digits) {
  validate_padic_params(p, q0, max_level, digits);
  if (n < 0 || x0 < 0) throw std::invalid_argument("n and x0 must be nonnegative");
  const RatQ exact = x0 == 0 ? carlitz_beta(n) : beta_poly_at_int(n, x0);
  const Padic target = ratq_to_padic(exact, p, q0, digits + max_level);
  return detail::run_levels(
      "eq4", {{"digits", digits}, {"level", max_level}, {"n", n}, {"p", p}, {"q0", q0}, {"x0", x0}}, max_level,
      [&](int level) {
        return riemann_sum_integral({Integrand::shifted_power(n, x0), Measure::MuQ}, p, q0, level, digits);
      },
      [&](int) { return target; });
}

/// The q^{-1}-side integral of [1 - x0 + x]_{1/q}^n against (-1)^n q^n times
/// the q-side integral of [x0 + x]_q^n, both as Riemann sums at each level.
inline PadicCheck padic_check_eq15(long n, long x0, long p, long q0, int max_level, int digits) {
  validate_padic_params(p, q0, max_level, digits);
  if (n < 0 || x0 < 0) throw std::invalid_argument("n and x0 must be nonnegative");
  const Padic factor =
      Padic::from_rational(BigRat(BigInt(sign_pow(n)) * ipow(BigInt(q0), n)), p, digits + max_level + 1);
  return detail::run_levels(
      "eq15", {{"digits", digits}, {"level", max_level}, {"n", n}, {"p", p}, {"q0", q0}, {"x0", x0}}, max_level,
      [&](int level) {
        return riemann_sum_integral({Integrand::reflected_shifted_power(n, x0), Measure::MuQInv}, p, q0, level,
                                    digits);
      },
      [&](int level) {
        return factor * riemann_sum_integral({Integrand::shifted_power(n, x0), Measure::MuQ}, p, q0, level, digits);
      });
}

/// Riemann sums of [1 - x]_{1/q}^n against q^2 beta_{n,1/q} + (n+1) - q.
inline PadicCheck padic_check_eq18(long n, long p, long q0, int max_level, int digits) {
  if (n <= 1) throw std::invalid_argument("closed form stated only for n>1");
  validate_padic_params(p, q0, max_level, digits);
  const Padic target = ratq_to_padic(integral_one_minus_x_pow(n), p, q0, digits + max_level);
  return detail::run_levels(
      "eq18", {{"digits", digits}, {"level", max_level}, {"n", n}, {"p", p}, {"q0", q0}}, max_level,
      [&](int level) {
        return riemann_sum_integral({Integrand::power_of_one_minus(n), Measure::MuQ}, p, q0, level, digits);
      },
      [&](int) { return target; });
}

/// Valuations of (Riemann sum of [x]_q^n - beta_{n,q}) for levels 1..max_level.
inline std::vector<LevelValuation> convergence_report(long n, long p, long q0, int max_level, int digits) {
  return padic_check_eq4(n, 0, p, q0, max_level, digits).levels;
}

inline std::string render_levels(const std::vector<LevelValuation>& levels) {
  std::string out = "valuations:";
  for (const auto& l : levels) {
    out += " N=" + std::to_string(l.level) + ":" + (l.exact ? "exact" : std::to_string(l.valuation));
  }
  return out;
}

inline Report to_report(const PadicCheck& c, std::string id) {
  Report r;
  r.id = std::move(id);
  r.params = c.params;
  r.status = c.converging ? Status::Verified : Status::Failed;
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.notes = render_levels(c.levels) + "; criterion v >= N - " + std::to_string(kConvergenceSlack);
  return r;
}

inline Report check_eq15_padic(long n, long x0, long p, long q0, int level, int digits) {
  return to_report(padic_check_eq15(n, x0, p, q0, level, digits), "eq15-padic");
}

inline Report check_eq18_padic(long n, long p, long q0, int level, int digits) {
  return to_report(padic_check_eq18(n, p, q0, level, digits), "eq18-padic");
}

}  // namespace qbern
