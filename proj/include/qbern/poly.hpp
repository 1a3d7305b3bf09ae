#pragma once

// Univariate polynomials in q over the rationals.
//
// Coefficients are stored densely, lowest degree first, with no trailing
// zeros; the zero polynomial is the empty vector.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbern/bigrat.hpp"

namespace qbern {

class PolyQ {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  PolyQ() = default;
  PolyQ(const BigRat& c) {  // NOLINT: constants promote implicitly
    if (c != 0) coeffs_.push_back(c);
  }
  PolyQ(long c) : PolyQ(BigRat(c)) {}  // NOLINT
  explicit PolyQ(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyQ q() { return monomial(1, 1); }
  static PolyQ monomial(const BigRat& c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    if (c == 0) return {};
    std::vector<BigRat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return PolyQ(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c != 0; }));
  }

  BigRat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const BigRat& lead() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<BigRat>& coefficients() const { return coeffs_; }

  PolyQ operator-() const {
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  PolyQ& operator+=(const PolyQ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  PolyQ& operator-=(const PolyQ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyQ(std::move(r));
  }
  friend PolyQ operator*(const BigRat& s, PolyQ p) {
    if (s == 0) return {};
    for (auto& c : p.coeffs_) c *= s;
    return p;
  }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws on a zero divisor.
  friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {PolyQ{}, a};
    std::vector<BigRat> rem = a.coeffs_;
    std::vector<BigRat> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
    const std::size_t db = b.coeffs_.size() - 1;
    const BigRat inv_lead = 1 / b.coeffs_.back();
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i] == 0) continue;
      BigRat f = rem[i] * inv_lead;
      quo[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
    }
    rem.resize(db);
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
  }

  /// Exact division; throws if b does not divide a.
  friend PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) throw std::logic_error("polynomial division is not exact");
    return quo;
  }

  PolyQ monic() const {
    if (is_zero()) return {};
    return BigRat(1 / lead()) * *this;
  }

  /// Monic gcd by the Euclidean algorithm over Q; gcd(0, 0) = 0.
  friend PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
      if (b.degree() == 0) return PolyQ(1);
      PolyQ r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  PolyQ pow(unsigned e) const {
    PolyQ result(1), base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  BigRat eval(const BigRat& x) const {
    BigRat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  /// q^{deg} p(1/q): coefficient reversal after stripping q-power factors.
  PolyQ reversed() const {
    if (is_zero()) return {};
    std::vector<BigRat> v(coeffs_.begin() + low_degree(), coeffs_.end());
    std::reverse(v.begin(), v.end());
    return PolyQ(std::move(v));
  }

  std::string render(char var = 'q') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigRat& c = coeffs_[i];
      if (c == 0) continue;
      std::string mono;
      if (i == 1) mono = std::string(1, var);
      if (i > 1) mono = std::string(1, var) + "^" + std::to_string(i);
      std::string term;
      if (mono.empty()) term = c.get_str();
      else if (c == 1) term = mono;
      else if (c == -1) term = "-" + mono;
      else term = c.get_str() + "*" + mono;
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRat> coeffs_;
};

}  // namespace qbern
