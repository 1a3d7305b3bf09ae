#pragma once

// Seeded generators for property tests over PolyQ, RatQ and MPoly.

#include <random>

#include "qbern/mpoly.hpp"
#include "qbern/ratq.hpp"

namespace qbern::proptest {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRat coefficient() {
    const long den = small(1, 4);
    return ratio(small(-5, 5), den);
  }

  PolyQ poly(int max_degree) {
    std::vector<BigRat> c;
    const int deg = static_cast<int>(small(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(coefficient());
    return PolyQ(std::move(c));
  }

  PolyQ nonzero_poly(int max_degree) {
    for (;;) {
      PolyQ p = poly(max_degree);
      if (!p.is_zero()) return p;
    }
  }

  RatQ ratq(int max_degree = 3) { return RatQ::make(poly(max_degree), nonzero_poly(max_degree)); }

  MPoly mpoly(int terms = 4, int max_exp = 3) {
    MPoly out;
    for (int i = 0; i < terms; ++i) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m.exps[static_cast<std::size_t>(v)] = static_cast<int>(small(0, max_exp));
      out += MPoly::term(ratq(2), m);
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace qbern::proptest
