#pragma once

// Randomized invariant checks shared by the unit suite and the acceptance run.
// Each returns the number of violations found.

#include <random>
#include <set>

#include "fixtures.hpp"
#include "thetarel/enumeration.hpp"
#include "thetarel/relations.hpp"

namespace properties {

using namespace thetarel;
using fixtures::q;

inline RationalVector randomVector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  RationalVector v(n);
  for (auto& x : v) x = q(num(rng), den(rng));
  return v;
}

// B(x,y) = Q(x+y) - Q(x) - Q(y)
inline std::size_t polarization(std::uint64_t seed, int lattices = 20, int pairs = 25) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int t = 0; t < lattices; ++t) {
    GramLattice l(fixtures::randomEvenGram(rng, 2 + static_cast<std::size_t>(t % 3), 6));
    for (int k = 0; k < pairs; ++k) {
      RationalVector x = randomVector(rng, l.dim()), y = randomVector(rng, l.dim()), s(l.dim());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
      if (l.bilinear(x, y) != l.quad(s) - l.quad(x) - l.quad(y)) ++bad;
      if (l.bilinear(x, y) != l.bilinear(y, x)) ++bad;
    }
  }
  return bad;
}

inline std::size_t hatIdempotence(std::uint64_t seed, int trials = 100) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(0, 5), size(1, 8), dim(1, 4);
  std::size_t bad = 0;
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    std::vector<MultiIndex> s;
    for (int k = size(rng); k > 0; --k) {
      std::vector<int> c(n);
      for (auto& x : c) x = e(rng);
      s.emplace_back(c);
    }
    auto h = hatClosure(s);
    auto hh = hatClosure(h);
    if (!(h == hh)) ++bad;
    std::set<std::vector<int>> hs;
    for (const auto& p : h) hs.insert(p.e);
    for (const auto& p : s)
      if (!hs.count(p.e)) ++bad;
  }
  return bad;
}

// Gamma(k+a)/Gamma(k+b) * Gamma(k+b)/Gamma(k+c) = Gamma(k+a)/Gamma(k+c), away from poles
inline std::size_t gammaMultiplicativity() {
  std::size_t bad = 0;
  for (long twice = 1; twice <= 16; ++twice) {
    const HalfInteger k = HalfInteger::fromTwice(twice);
    for (long a = 0; a <= 6; ++a)
      for (long b = 0; b <= 6; ++b)
        for (long c = 0; c <= 6; ++c)
          if (gammaRatio(k, a, b) * gammaRatio(k, b, c) != gammaRatio(k, a, c)) ++bad;
  }
  return bad;
}

// Stream enumeration equals a box scan, on random even positive definite Gram matrices.
inline std::size_t enumerationVsBox(std::uint64_t seed, int perSize = 10) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < perSize; ++t) {
      GramLattice l(fixtures::randomEvenGram(rng, n, 6));
      const auto reps = l.dualCosetReps();
      for (std::size_t r = 0; r < std::min<std::size_t>(reps.size(), 4); ++r) {
        const Rational bound = 3;
        std::vector<IntVector> got;
        for (const auto& cv : vectorsInCosetBounded(l, reps[r], bound, safeCBound(l))) got.push_back(cv.v);
        std::sort(got.begin(), got.end());
        if (got != fixtures::boxOracle(l, reps[r], bound)) ++bad;
      }
    }
  }
  return bad;
}

struct ShiftCase {
  IntMatrix gram;
  long power;
  std::vector<MultiIndex> p0;
};

// Theta vectors do not depend on the representatives chosen for alpha mod L and beta mod L#.
inline std::size_t thetaShiftInvariance(std::uint64_t seed, const std::vector<ShiftCase>& cases, int shifts = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> w(-3, 3);
  std::size_t bad = 0;
  for (const auto& c : cases) {
    GramLattice l(c.gram);
    auto index = buildIndexSet(hatClosure(c.p0), l.level(), c.power, l.dim());
    ThetaBuilder b(l, c.power, index);
    std::vector<RationalVector> alphas;
    for (const auto& a : l.dualCosetReps())
      if (l.validateAlpha(a, c.power)) alphas.push_back(a);
    const auto betas = l.betaReps(c.power);
    const auto base = b.build(alphas, betas);
    for (int s = 0; s < shifts; ++s) {
      std::vector<RationalVector> ma = alphas, mb = betas;
      for (auto& a : ma)
        for (auto& x : a) x += w(rng);
      // beta moves by a dual vector G^{-1} u
      for (auto& bv : mb) {
        IntVector u(l.dim());
        for (auto& x : u) x = w(rng);
        for (std::size_t i = 0; i < l.dim(); ++i)
          for (std::size_t j = 0; j < l.dim(); ++j) bv[i] += l.gramInverse()(i, j) * u[j];
      }
      const auto moved = b.build(ma, mb);
      for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t e = 0; e < base[i].entries.size(); ++e)
          if (!(base[i].entries[e] == moved[i].entries[e])) ++bad;
    }
  }
  return bad;
}

}  // namespace properties
