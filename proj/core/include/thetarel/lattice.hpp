#pragma once

#include <vector>

#include "thetarel/rational.hpp"
#include "thetarel/smith.hpp"

namespace thetarel {

// Even positive definite lattice Z^n with Gram matrix G. Q(v) = vGv/2, B(v,w) = vGw.
class GramLattice {
 public:
  // Throws InputError unless G is square, symmetric, even on the diagonal and positive definite.
  explicit GramLattice(IntMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const BigInt& det() const { return det_; }
  long level() const { return level_; }
  const RationalMatrix& gramInverse() const { return inverse_; }
  const SmithForm& smith() const { return smith_; }

  Rational quad(const RationalVector& v) const;
  Rational bilinear(const RationalVector& v, const RationalVector& w) const;
  // G*v, the coordinates of B(v, e_l) for l = 0..n-1
  RationalVector pairWithBasis(const RationalVector& v) const;

  GramLattice rescaled(long factor) const;

  // det(G) representatives of L#/L with coordinates in [0,1).
  std::vector<RationalVector> dualCosetReps() const;

  // Representatives of (L# + L/N')/L#, each of the form w/N' with coordinates in [0,1).
  // Precondition: N' divides the level.
  std::vector<RationalVector> betaReps(long power) const;

  bool inDual(const RationalVector& v) const;
  bool inBetaGroup(const RationalVector& beta, long power) const;
  // N' * Q(alpha) is an integer. Precondition: alpha lies in L#.
  bool validateAlpha(const RationalVector& alpha, long power) const;

  bool equivalentModL(const RationalVector& a, const RationalVector& b) const;
  bool equivalentModDual(const RationalVector& a, const RationalVector& b) const;

 private:
  IntMatrix gram_;
  BigInt det_;
  long level_ = 1;
  RationalMatrix inverse_;
  SmithForm smith_;
};

RationalVector reduceModOne(RationalVector v);
RationalVector toRational(const IntVector& v);

// Canonical Gram matrices used throughout the examples.
IntMatrix gramD4();
IntMatrix gramA2();
IntMatrix gramA3();
IntMatrix gramE8();
IntMatrix blockDiagonal(const IntMatrix& a, const IntMatrix& b);

}  // namespace thetarel
