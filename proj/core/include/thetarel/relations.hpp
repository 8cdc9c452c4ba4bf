#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetarel/cyclotomic.hpp"
#include "thetarel/lattice.hpp"
#include "thetarel/taylor.hpp"

namespace thetarel {

// 2 for levels 1 and 2, otherwise 1.
long deltaLevel(long level);

// Largest n kept for index p: floor(delta N^2/24 * (N' dim/2 + s(p)) * prod_{q | N} (1 - 1/q^2)).
long nBound(const MultiIndex& p, long level, long power, std::size_t dim);

struct IndexEntry {
  MultiIndex p;
  long n;
};

// (p, n) for p in the given list and 0 <= n <= min(nBound(p), nCap), p-major.
std::vector<IndexEntry> buildIndexSet(const std::vector<MultiIndex>& p0hat, long level, long power, std::size_t dim,
                                      std::optional<long> nCap = std::nullopt);

struct ThetaLabel {
  RationalVector alpha;
  RationalVector beta;
};

// theta_{alpha,beta}^{N'} written as an I-indexed vector over Q(zeta_{N'}).
struct ThetaVector {
  ThetaLabel label;
  std::vector<Cyclotomic> entries;
};

std::string thetaName(const ThetaLabel& label, long power);

class ThetaBuilder {
 public:
  ThetaBuilder(const GramLattice& lattice, long power, std::vector<IndexEntry> index,
               const std::optional<Rational>& c = std::nullopt);

  const std::vector<IndexEntry>& index() const { return index_; }
  long power() const { return power_; }
  HalfInteger weight() const { return weight_; }
  // P_{k,p,N'G} for the distinct p of the index set, in order of first appearance.
  const std::vector<std::pair<MultiIndex, Polynomial>>& polynomials() const { return polys_; }

  // One tuple enumeration for alpha feeds every beta.
  std::vector<ThetaVector> forAlpha(const RationalVector& alpha, const std::vector<RationalVector>& betas) const;

  // alpha-major, beta-minor. threads > 1 splits the work over alphas; output is identical.
  std::vector<ThetaVector> build(const std::vector<RationalVector>& alphas, const std::vector<RationalVector>& betas,
                                 unsigned threads = 1) const;

 private:
  const GramLattice* lattice_;
  long power_;
  HalfInteger weight_;
  std::vector<IndexEntry> index_;
  Rational c_;
  std::vector<std::pair<MultiIndex, Polynomial>> polys_;
  std::vector<std::size_t> entryPoly_;  // index entry -> position in polys_
  long nMax_ = 0;
};

struct Relation {
  std::size_t dependent;                  // position in the input list
  std::vector<std::size_t> basis;         // independent positions used
  std::vector<Cyclotomic> coefficients;   // theta_dep = sum coefficients[i] * theta_basis[i]
};

struct RelationReport {
  std::vector<std::size_t> independent;
  std::vector<Relation> relations;
  std::size_t rank() const { return independent.size(); }
};

// Rows in input order: a row raising the rank is independent, any other row is solved against the earlier
// independent rows.
RelationReport findRelations(const std::vector<ThetaVector>& vectors);

}  // namespace thetarel
