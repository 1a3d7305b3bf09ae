#pragma once

// Sparse polynomials in X, Y, T with coefficients in Q(q).
//
// X stands for [x1]_q, Y for [x2]_q and T for q^x. Terms live in an ordered
// map keyed by exponent triple, and zero coefficients are never stored, so
// structural equality is mathematical equality.

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbern/ratq.hpp"

namespace qbern {

enum class Var { X = 0, Y = 1, T = 2 };

inline char var_name(Var v) {
  switch (v) {
    case Var::X: return 'X';
    case Var::Y: return 'Y';
    case Var::T: return 'T';
  }
  return '?';
}

struct Monomial {
  std::array<int, 3> exps{0, 0, 0};

  int operator[](Var v) const { return exps[static_cast<std::size_t>(v)]; }
  int& operator[](Var v) { return exps[static_cast<std::size_t>(v)]; }
  bool is_one() const { return exps == std::array<int, 3>{0, 0, 0}; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {{a.exps[0] + b.exps[0], a.exps[1] + b.exps[1], a.exps[2] + b.exps[2]}};
  }
  auto operator<=>(const Monomial&) const = default;
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, RatQ>;

  MPoly() = default;
  MPoly(const RatQ& c) {  // NOLINT
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  MPoly(long c) : MPoly(RatQ(c)) {}  // NOLINT

  static MPoly var(Var v, int exponent = 1) {
    Monomial m;
    m[v] = exponent;
    return term(RatQ(1), m);
  }
  static MPoly term(const RatQ& c, const Monomial& m) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  RatQ constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant in X, Y, T");
    return terms_.empty() ? RatQ() : terms_.begin()->second;
  }
  RatQ coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatQ() : it->second;
  }
  int degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend MPoly operator*(const RatQ& s, const MPoly& p) {
    if (s.is_zero()) return {};
    MPoly r = p;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned e) const {
    MPoly result(1), base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Formal partial derivative.
  MPoly deriv(Var v) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Monomial dm = m;
      dm[v] -= 1;
      r.add_term(dm, RatQ(m[v]) * c);
    }
    return r;
  }

  /// Simultaneous substitution; variables mapped to nullopt are kept.
  MPoly compose(const std::array<std::optional<MPoly>, 3>& images) const {
    std::array<std::vector<MPoly>, 3> powers;
    auto power_of = [&](std::size_t i, int e) -> const MPoly& {
      auto& cache = powers[i];
      if (cache.empty()) cache.emplace_back(1);
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *images[i]);
      return cache[static_cast<std::size_t>(e)];
    };
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial kept;
      MPoly factor(c);
      for (std::size_t i = 0; i < 3; ++i) {
        if (images[i]) factor *= power_of(i, m.exps[i]);
        else kept.exps[i] = m.exps[i];
      }
      if (!kept.is_one()) factor *= term(RatQ(1), kept);
      r += factor;
    }
    return r;
  }

  MPoly subst(Var v, const MPoly& value) const {
    std::array<std::optional<MPoly>, 3> images;
    images[static_cast<std::size_t>(v)] = value;
    return compose(images);
  }

  /// Value in Q(q) after substituting every variable.
  RatQ eval(const RatQ& x, const RatQ& y, const RatQ& t) const {
    return compose({MPoly(x), MPoly(y), MPoly(t)}).constant_value();
  }

  MPoly map_coefficients(const std::function<RatQ(const RatQ&)>& f) const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  /// Terms in descending exponent order, e.g. `X^2*Y-2*q*X+(q+1)/(q-1)`.
  std::string render() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (Var v : {Var::X, Var::Y, Var::T}) {
        if (m[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(v);
        if (m[v] != 1) mono += "^" + std::to_string(m[v]);
      }
      std::string t;
      if (mono.empty()) t = c.render();
      else if (c.is_one()) t = mono;
      else if ((-c).is_one()) t = "-" + mono;
      else if (c.is_polynomial() && c.num().term_count() == 1) t = c.render() + "*" + mono;
      else t = "(" + c.render() + ")*" + mono;
      if (!out.empty() && t.front() != '-') out += "+";
      out += t;
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const RatQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TermMap terms_;
};

}  // namespace qbern
