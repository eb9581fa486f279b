#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jetorder/diffop.hpp"
#include "jetorder/matrix.hpp"
#include "jetorder/polynomial.hpp"
#include "jetorder/toric.hpp"

namespace jetorder::testkit {

/// Seeded source of random algebraic objects for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  Rational rational(long span = 9, long max_den = 5);
  Rational nonzero_rational(long span = 9, long max_den = 5);
  std::vector<Rational> point(std::size_t nvars);
  Exponent exponent(std::size_t nvars, int max_degree);
  /// 1..max_terms random terms of degree <= max_degree.
  Polynomial polynomial(std::size_t nvars, int max_degree, int max_terms);
  DifferentialOperator op(std::size_t nvars, int max_degree, int max_order, int max_terms);
  /// Random subset of [0, box]^nvars of size in [min_size, max_size].
  std::vector<Exponent> monomial_set(std::size_t nvars, int box, std::size_t min_size,
                                     std::size_t max_size);
  RationalMatrix matrix(std::size_t rows, std::size_t cols, long span = 4);
  /// Smooth lattice polygon: a Hirzebruch trapezoid, rectangle or dilated
  /// triangle moved by a random unimodular map into the positive quadrant.
  LatticePolytope smooth_polygon(int max_size);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jetorder::testkit
