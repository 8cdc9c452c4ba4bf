#pragma once

#include <optional>
#include <vector>

#include "thetarel/enumeration.hpp"
#include "thetarel/lattice.hpp"
#include "thetarel/taylor.hpp"

namespace thetarel {

// Minimal-vector sums over the nonzero classes of L'#/L' for a rescaled lattice L'.
class BpTable {
 public:
  // form: bilinear form used to pair a minimal vector with e_l; defaults to the Gram of the rescaled lattice.
  BpTable(const GramLattice& rescaled, const std::optional<Rational>& c = std::nullopt,
          const std::optional<RationalMatrix>& form = std::nullopt);

  const std::vector<RationalVector>& reps() const { return reps_; }
  const std::vector<MinimalVectors>& minimal() const { return minimal_; }
  std::size_t columns() const { return reps_.size(); }

  // Entry j: sum over v in S_j of prod_l B(v, e_l)^{p_l}.
  std::vector<Rational> row(const MultiIndex& p) const;

 private:
  std::vector<RationalVector> reps_;
  std::vector<MinimalVectors> minimal_;
  std::vector<std::vector<RationalVector>> pairings_;  // per column, per minimal vector: B(v, e_l)
};

struct P0Result {
  std::vector<MultiIndex> p0;  // starts with the zero index
  std::size_t rank = 0;
  std::size_t candidatesTried = 0;
};

struct P0SearchOptions {
  int maxSum = 10;
  std::optional<Rational> c;
  std::optional<RationalMatrix> form;
};

// Greedy search over nonzero p in graded lex order, keeping p when its row raises the rank.
// Throws SearchError when rank det - 1 is not reached within maxSum.
P0Result findP0(const GramLattice& rescaled, const P0SearchOptions& opts = {});

struct FlpCheck {
  bool nonzero = false;
  Rational lowestExponent;    // exponent of the first nonzero coefficient, when nonzero
  Rational lowestCoefficient;
  Rational columnShift;       // sum of the minimal norms m_j, the smallest possible exponent
};

// Determinant of the d x d matrix of truncated series sum_{v in t_j + L'} prod_l B'(v,e_l)^{p_i,l} q^{Q'(v)},
// computed up to q^{columnShift + relTrunc}.
FlpCheck flp0QexpCheck(const GramLattice& rescaled, const std::vector<MultiIndex>& p0,
                       const std::vector<RationalVector>& reps, const Rational& relTrunc,
                       const std::optional<Rational>& c = std::nullopt);

}  // namespace thetarel
