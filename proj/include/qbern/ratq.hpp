#pragma once

// Elements of the rational function field Q(q).
//
// Canonical form: gcd(num, den) = 1 and den is monic, so two values are equal
// exactly when their numerators and denominators are equal.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "qbern/bigrat.hpp"
#include "qbern/poly.hpp"

namespace qbern {

class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(const BigRat& c) : num_(c), den_(1) {}  // NOLINT
  RatQ(long c) : RatQ(BigRat(c)) {}            // NOLINT
  RatQ(PolyQ p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Reduced fraction num/den; throws "division by zero in Q(q)" when den = 0.
  static RatQ make(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) throw std::domain_error("division by zero in Q(q)");
    RatQ r;
    if (num.is_zero()) return r;
    if (den.is_constant()) {
      const BigRat inv = 1 / den.lead();
      r.num_ = inv * num;
      return r;
    }
    PolyQ g = gcd(num, den);
    PolyQ n = g.is_one() ? num : exact_div(num, g);
    PolyQ d = g.is_one() ? den : exact_div(den, g);
    const BigRat inv = 1 / d.lead();
    r.num_ = inv * n;
    r.den_ = inv * d;
    return r;
  }

  /// num/den for parts already known to be coprime; only the monic scaling
  /// is applied. Skips the gcd that make() pays for.
  static RatQ from_coprime(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) throw std::domain_error("division by zero in Q(q)");
    RatQ r;
    if (num.is_zero()) return r;
    const BigRat inv = 1 / den.lead();
    r.num_ = inv * num;
    r.den_ = inv * den;
    return r;
  }

  static RatQ q() { return RatQ(PolyQ::q()); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational_constant() const { return den_.is_one() && num_.is_constant(); }
  BigRat constant_value() const {
    if (!is_rational_constant()) throw std::domain_error("value depends on q");
    return num_.coeff(0);
  }

  RatQ operator-() const {
    RatQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatQ operator+(const RatQ& a, const RatQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatQ(a.num_ + b.num_);
    if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
    PolyQ g = gcd(a.den_, b.den_);
    PolyQ ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
    return make(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  friend RatQ operator-(const RatQ& a, const RatQ& b) { return a + (-b); }

  friend RatQ operator*(const RatQ& a, const RatQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatQ(a.num_ * b.num_);
    // Cross-cancel so the product is already reduced.
    PolyQ g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    PolyQ n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    PolyQ d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    RatQ r;
    const BigRat inv = 1 / d.lead();
    r.num_ = inv * n;
    r.den_ = inv * d;
    return r;
  }

  RatQ inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q)");
    RatQ r;
    const BigRat inv = 1 / num_.lead();
    r.num_ = inv * den_;
    r.den_ = inv * num_;
    return r;
  }

  friend RatQ operator/(const RatQ& a, const RatQ& b) { return a * b.inverse(); }

  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

  friend bool operator==(const RatQ& a, const RatQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatQ pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatQ r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
  }

  /// The image under q -> 1/q, with negative powers of q cleared.
  RatQ subst_qinv() const {
    if (is_zero()) return {};
    const int dn = num_.degree(), dd = den_.degree();
    PolyQ n = num_.reversed() * PolyQ::monomial(1, std::max(0, dd - dn));
    PolyQ d = den_.reversed() * PolyQ::monomial(1, std::max(0, dn - dd));
    return make(n, d);
  }

  /// Exact value at q = q0; throws when q0 is a pole.
  BigRat eval(const BigRat& q0) const {
    BigRat d = den_.eval(q0);
    if (d == 0) throw std::domain_error("pole at q = " + q0.get_str());
    return num_.eval(q0) / d;
  }

  std::string render() const {
    if (den_.is_one()) return num_.render();
    std::string n = num_.render();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.render();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  PolyQ num_;
  PolyQ den_;
};

}  // namespace qbern
