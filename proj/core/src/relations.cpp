#include "thetarel/relations.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "thetarel/enumeration.hpp"
#include "thetarel/errors.hpp"
#include "thetarel/linalg.hpp"

namespace thetarel {

long deltaLevel(long level) { return (level == 1 || level == 2) ? 2 : 1; }

long nBound(const MultiIndex& p, long level, long power, std::size_t dim) {
  Rational b = Rational(deltaLevel(level) * level * level, 24);
  b.canonicalize();
  Rational k(power * static_cast<long>(dim), 2);
  k.canonicalize();
  b *= k + p.sum();
  long x = level;
  for (long q = 2; q <= x; ++q) {
    if (x % q != 0) continue;
    while (x % q == 0) x /= q;
    Rational f(q * q - 1, q * q);
    f.canonicalize();
    b *= f;
  }
  return floorOf(b).get_si();
}

std::vector<IndexEntry> buildIndexSet(const std::vector<MultiIndex>& p0hat, long level, long power, std::size_t dim,
                                      std::optional<long> nCap) {
  std::vector<IndexEntry> out;
  for (const auto& p : p0hat) {
    long top = nBound(p, level, power, dim);
    if (nCap) top = std::min(top, *nCap);
    for (long n = 0; n <= top; ++n) out.push_back({p, n});
  }
  return out;
}

std::string thetaName(const ThetaLabel& label, long power) {
  return "θ^" + std::to_string(power) + "_{" + toString(label.alpha) + "," + toString(label.beta) + "}";
}

ThetaBuilder::ThetaBuilder(const GramLattice& lattice, long power, std::vector<IndexEntry> index,
                           const std::optional<Rational>& c)
    : lattice_(&lattice),
      power_(power),
      weight_(HalfInteger::fromTwice(power * static_cast<long>(lattice.dim()))),
      index_(std::move(index)),
      c_(c ? *c : safeCBound(lattice)) {
  if (power <= 0 || lattice.level() % power != 0)
    throw PreconditionError("power must be a positive divisor of the level");
  RationalMatrix m(lattice.gram().scaled(power));
  std::map<MultiIndex, std::size_t> seen;
  for (const auto& e : index_) {
    if (e.p.size() != lattice.dim()) throw StructuralError("index multi-index has wrong length");
    auto [it, inserted] = seen.emplace(e.p, polys_.size());
    if (inserted) polys_.emplace_back(e.p, pkpm(weight_, e.p, m));
    entryPoly_.push_back(it->second);
    nMax_ = std::max(nMax_, e.n);
  }
}

std::vector<ThetaVector> ThetaBuilder::forAlpha(const RationalVector& alpha,
                                                const std::vector<RationalVector>& betas) const {
  const std::size_t dim = lattice_->dim();
  const RationalVector a0 = reduceModOne(alpha);
  const BigInt den = lcmOfDenominators(a0);
  const long d = den.get_si();

  std::vector<CosetVector> cands = vectorsInCosetBounded(*lattice_, a0, Rational(nMax_), c_);
  sortByQ(cands);
  std::vector<Rational> weights;
  std::vector<std::vector<long>> scaled;  // D * (a0 + v)
  for (const auto& cv : cands) {
    weights.push_back(cv.q);
    std::vector<long> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = cv.v[i] * d + BigInt(a0[i] * den).get_si();
    scaled.push_back(std::move(x));
  }

  // (n, D * sum of points) -> number of ordered tuples
  std::map<std::pair<long, std::vector<long>>, long> counts;
  std::vector<long> sum(dim);
  forEachTupleBounded(weights, static_cast<int>(power_), Rational(nMax_),
                      [&](const std::vector<std::size_t>& idx, const Rational& s) {
                        if (!isIntegral(s)) return;
                        std::fill(sum.begin(), sum.end(), 0);
                        for (std::size_t k : idx)
                          for (std::size_t i = 0; i < dim; ++i) sum[i] += scaled[k][i];
                        ++counts[{s.get_num().get_si(), sum}];
                      });

  std::map<long, std::vector<std::size_t>> entriesAt;
  for (std::size_t e = 0; e < index_.size(); ++e) entriesAt[index_[e].n].push_back(e);

  std::vector<ScaledEvaluator> evals;
  for (const auto& [p, poly] : polys_) evals.emplace_back(poly, p.sum());

  // beta weight: N' B(beta, sum v) with sum v = S/D - N' alpha
  std::vector<RationalVector> gBeta;
  std::vector<Rational> offset;
  for (const auto& b : betas) {
    gBeta.push_back(lattice_->pairWithBasis(b));
    Rational o = 0;
    for (std::size_t i = 0; i < dim; ++i) o += gBeta.back()[i] * alpha.at(i);
    offset.push_back(o * power_ * power_);
  }

  const std::size_t nb = betas.size();
  // acc[beta][entry][residue]
  std::vector<std::vector<std::vector<Rational>>> acc(
      nb, std::vector<std::vector<Rational>>(index_.size(), std::vector<Rational>(static_cast<std::size_t>(power_))));
  const BigInt e = den * power_;
  std::vector<BigInt> y(dim);
  std::vector<long> residue(nb);
  std::vector<Rational> value(polys_.size());
  std::vector<char> have(polys_.size());
  for (const auto& [key, count] : counts) {
    auto it = entriesAt.find(key.first);
    if (it == entriesAt.end()) continue;
    for (std::size_t i = 0; i < dim; ++i) y[i] = key.second[i];
    for (std::size_t b = 0; b < nb; ++b) {
      Rational r = 0;
      for (std::size_t i = 0; i < dim; ++i) r += gBeta[b][i] * key.second[i];
      r = r * power_ / den - offset[b];
      if (!isIntegral(r)) throw PreconditionError("beta is not admissible for this power");
      BigInt m = r.get_num() % power_;
      if (m < 0) m += power_;
      residue[b] = m.get_si();
    }
    std::fill(have.begin(), have.end(), 0);
    const BigInt n(key.first);
    for (std::size_t entry : it->second) {
      const std::size_t pi = entryPoly_[entry];
      if (!have[pi]) {
        value[pi] = evals[pi](n, y, e) * count;
        have[pi] = 1;
      }
      for (std::size_t b = 0; b < nb; ++b) acc[b][entry][static_cast<std::size_t>(residue[b])] += value[pi];
    }
  }

  std::vector<ThetaVector> out;
  for (std::size_t b = 0; b < nb; ++b) {
    ThetaVector tv{{alpha, betas[b]}, {}};
    tv.entries.reserve(index_.size());
    for (std::size_t entry = 0; entry < index_.size(); ++entry) {
      Cyclotomic c(static_cast<unsigned>(power_));
      for (long r = 0; r < power_; ++r) {
        const Rational& v = acc[b][entry][static_cast<std::size_t>(r)];
        if (v != 0) c.addRootMultiple(v, r);
      }
      tv.entries.push_back(std::move(c));
    }
    out.push_back(std::move(tv));
  }
  return out;
}

std::vector<ThetaVector> ThetaBuilder::build(const std::vector<RationalVector>& alphas,
                                             const std::vector<RationalVector>& betas, unsigned threads) const {
  std::vector<std::vector<ThetaVector>> per(alphas.size());
  if (threads <= 1 || alphas.size() <= 1) {
    for (std::size_t i = 0; i < alphas.size(); ++i) per[i] = forAlpha(alphas[i], betas);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto work = [&] {
      for (;;) {
        const std::size_t i = next++;
        if (i >= alphas.size()) return;
        try {
          per[i] = forAlpha(alphas[i], betas);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, alphas.size()); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<ThetaVector> out;
  for (auto& v : per)
    for (auto& t : v) out.push_back(std::move(t));
  return out;
}

RelationReport findRelations(const std::vector<ThetaVector>& vectors) {
  RelationReport rep;
  if (vectors.empty()) return rep;
  const std::size_t cols = vectors[0].entries.size();
  unsigned order = 1;
  for (const auto& v : vectors) {
    if (v.entries.size() != cols) throw StructuralError("theta vectors have different lengths");
    for (const auto& x : v.entries) order = lcmOrder(order, x.order());
  }
  auto lifted = [&](const ThetaVector& v) {
    std::vector<Cyclotomic> r;
    r.reserve(cols);
    for (const auto& x : v.entries) r.push_back(x.liftTo(order));
    return r;
  };
  EchelonBasis<Cyclotomic> basis(cols);
  std::vector<std::vector<Cyclotomic>> accepted;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto row = lifted(vectors[i]);
    if (basis.add(row)) {
      rep.independent.push_back(i);
      accepted.push_back(std::move(row));
      continue;
    }
    Relation rel{i, rep.independent, {}};
    if (!accepted.empty()) {
      auto x = solveLeft(ExactMatrix(accepted), row);
      if (!x) throw StructuralError("dependent row has no solution; rank bookkeeping is inconsistent");
      rel.coefficients = std::move(*x);
    }
    rep.relations.push_back(std::move(rel));
  }
  return rep;
}

}  // namespace thetarel
