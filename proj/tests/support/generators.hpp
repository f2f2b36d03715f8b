#pragma once

#include <cstdint>
#include <random>

#include "gmqh/exactpoly/matrix.hpp"
#include "gmqh/exactpoly/poly.hpp"

namespace gmqh::testing {

// Seeded generators for property tests. Sizes stay small so exact
// arithmetic remains fast.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range = 9, long max_den = 5) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long range = 9, long max_den = 5) {
    for (;;) {
      Rational r = rational(range, max_den);
      if (!is_zero(r)) return r;
    }
  }

  MultiPoly poly(const RingPtr& ring, int max_terms = 4, int max_exp = 3) {
    MultiPoly p(ring);
    const int terms = static_cast<int>(integer(0, max_terms));
    for (int k = 0; k < terms; ++k) {
      Exponents e(ring->size());
      for (auto& x : e) x = static_cast<int>(integer(0, max_exp));
      p.add_term(std::move(e), rational());
    }
    return p;
  }

  Matrix<Rational> rational_matrix(std::size_t rows, std::size_t cols) {
    Matrix<Rational> m(rows, cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gmqh::testing
