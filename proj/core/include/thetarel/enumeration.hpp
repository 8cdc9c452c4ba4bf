#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "thetarel/lattice.hpp"

namespace thetarel {

// 2 * trace(G^{-1}); bounds sum x_i^2 by c * Q(x) for every real x.
Rational safeCBound(const GramLattice& lattice);

struct CosetVector {
  IntVector v;  // integral part; the lattice point is alpha + v
  Rational q;   // Q(alpha + v)
};

// Deterministic depth-first walk over the box sum (v_i + alpha_i)^2 <= c * bound, integers tried in the
// order 0, 1, -1, 2, -2, ...; yields only points with Q(alpha + v) <= bound.
class CosetVectorStream {
 public:
  CosetVectorStream(const GramLattice& lattice, const RationalVector& alpha, const Rational& bound, const Rational& c);

  bool next(CosetVector& out);
  void reset();

 private:
  static long integerAt(long k) { return (k % 2 == 1) ? (k + 1) / 2 : -(k / 2); }

  const GramLattice* lattice_;
  std::size_t n_;
  long denom_;                 // common denominator D of alpha
  std::vector<long> shift_;    // D * alpha
  long boxLimit_ = -1;         // floor(c * bound * D^2); negative means empty
  long qLimit_ = -1;           // floor(2 * bound * D^2)
  std::vector<long> gram_;
  std::vector<long> idx_;
  std::vector<long> cur_;
  std::vector<long> partial_;
  std::size_t level_ = 0;
  bool done_ = false;
};

std::vector<CosetVector> vectorsInCosetBounded(const GramLattice& lattice, const RationalVector& alpha,
                                               const Rational& bound, const Rational& c);

struct MinimalVectors {
  Rational minimum;
  std::vector<RationalVector> vectors;  // the points alpha + v attaining the minimum
};

// Minimum of Q over alpha + L and all points attaining it; c defaults to safeCBound.
MinimalVectors minVectors(const GramLattice& lattice, const RationalVector& alpha,
                          const std::optional<Rational>& c = std::nullopt);

// Sorted by Q, ties kept in enumeration order.
void sortByQ(std::vector<CosetVector>& vs);

// Visits every ordered tuple (i_1..i_count) of indices into a list sorted by weight with total weight <= maxSum.
// Weights must be non-decreasing; throws PreconditionError otherwise.
void forEachTupleBounded(const std::vector<Rational>& sortedWeights, int count, const Rational& maxSum,
                         const std::function<void(const std::vector<std::size_t>&, const Rational&)>& visit);

// Ordered tuples whose weights sum to exactly n.
std::vector<std::vector<std::size_t>> tuplesWithQSum(const std::vector<Rational>& sortedWeights, int count,
                                                     const Rational& n);

}  // namespace thetarel
