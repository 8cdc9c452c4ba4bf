#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "thetarel/lattice.hpp"
#include "thetarel/relations.hpp"
#include "thetarel/taylor.hpp"

namespace fixtures {

using namespace thetarel;

inline Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline std::vector<MultiIndex> indices(const std::vector<std::vector<int>>& raw) {
  std::vector<MultiIndex> out;
  for (const auto& r : raw) out.emplace_back(r);
  return out;
}

// Reference P0 lists for the built-in lattices.
inline std::vector<MultiIndex> referenceP0D4() {
  return indices({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 1},
                  {0, 0, 2, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 2, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0},
                  {2, 0, 0, 0}, {0, 0, 1, 2}, {0, 0, 2, 1}, {0, 1, 0, 2}, {0, 1, 2, 0}, {1, 0, 0, 2}, {1, 0, 2, 0},
                  {1, 1, 0, 1}, {1, 1, 1, 0}, {0, 0, 0, 4}, {0, 0, 2, 2}, {0, 0, 4, 0}, {0, 1, 1, 2}, {0, 1, 2, 1},
                  {0, 2, 0, 2}, {0, 2, 1, 1}, {1, 0, 1, 2}, {1, 0, 2, 1}, {1, 1, 0, 2}, {1, 1, 2, 0}, {2, 0, 0, 2},
                  {2, 0, 1, 1}, {2, 2, 0, 0}, {0, 0, 1, 4}, {0, 0, 4, 1}, {0, 1, 0, 4}, {0, 1, 2, 2}, {1, 0, 0, 4},
                  {1, 0, 2, 2}, {1, 1, 1, 2}, {1, 1, 2, 1}, {0, 0, 2, 4}, {0, 0, 4, 2}, {0, 1, 1, 4}, {0, 1, 4, 1},
                  {0, 2, 0, 4}, {1, 0, 1, 4}, {1, 0, 4, 1}, {1, 1, 0, 4}, {1, 1, 2, 2}, {2, 0, 0, 4}, {2, 2, 0, 2},
                  {2, 2, 1, 1}, {0, 1, 2, 4}, {1, 0, 2, 4}, {1, 1, 1, 4}, {1, 1, 4, 1}, {0, 0, 4, 4}, {1, 1, 2, 4},
                  {2, 2, 0, 4}});
}

inline std::vector<MultiIndex> referenceP0A2() {
  return indices({{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 1},
                  {3, 0}, {0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}, {1, 4}, {2, 3}, {3, 2},
                  {0, 6}, {2, 4}, {3, 3}, {4, 2}, {1, 6}, {3, 4}, {4, 3}, {2, 6}, {3, 6}});
}

inline std::vector<MultiIndex> referenceP0A3() {
  return indices({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1},
                  {1, 1, 0}, {2, 0, 0}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {0, 0, 4}, {0, 2, 2},
                  {0, 3, 1}, {1, 1, 2}, {2, 0, 2}, {2, 1, 1}, {2, 2, 0}, {0, 1, 4}, {1, 0, 4}, {1, 2, 2},
                  {1, 3, 1}, {0, 2, 4}, {1, 1, 4}, {2, 0, 4}, {2, 2, 2}, {2, 3, 1}, {1, 2, 4}, {2, 2, 4}});
}

// The ten-term combination on A2 + A2 that all D_{6,p} with s(p) <= 6 annihilate.
struct Combination {
  std::vector<ThetaLabel> labels;
  std::vector<Cyclotomic> coeffs;
};

inline Combination blindSpotCombination() {
  const Rational t = q(1, 3), tt = q(2, 3);
  const std::vector<RationalVector> al = {{0, 0, 0, 0},   {0, 0, tt, t},  {0, 0, t, tt},
                                          {tt, t, 0, 0},  {tt, t, tt, t}, {tt, t, t, tt},
                                          {t, tt, 0, 0},  {t, tt, tt, t}, {t, tt, t, tt}};
  const std::vector<RationalVector> be = {{0, 0, 0, 0},  {0, 0, t, t},   {0, 0, tt, tt},
                                          {t, t, 0, 0},  {t, t, t, t},   {t, t, tt, tt},
                                          {tt, tt, 0, 0}, {tt, tt, t, t}, {tt, tt, tt, tt}};
  const std::vector<std::pair<int, int>> ij = {{0, 0}, {0, 1}, {0, 3}, {0, 4}, {1, 0},
                                               {3, 0}, {4, 0}, {1, 3}, {3, 1}, {8, 8}};
  const std::vector<int> sign = {1, -1, -1, 1, -1, -1, 1, 1, 1, -1};
  Combination c;
  for (std::size_t k = 0; k < ij.size(); ++k) {
    c.labels.push_back({al[static_cast<std::size_t>(ij[k].first)], be[static_cast<std::size_t>(ij[k].second)]});
    c.coeffs.emplace_back(1u, Rational(sign[k]));
  }
  return c;
}

// Determinant by cofactor expansion; small sizes only.
inline Rational leibnizDet(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const Rational term = a[0][j] * leibnizDet(minor);
    d += (j % 2 == 0) ? term : Rational(-term);
  }
  return d;
}

inline Rational leibnizDet(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return leibnizDet(a);
}

// Random even symmetric positive definite Gram matrix with |entries| <= maxEntry.
inline IntMatrix randomEvenGram(std::mt19937_64& rng, std::size_t n, long maxEntry) {
  std::uniform_int_distribution<long> off(-maxEntry, maxEntry);
  std::uniform_int_distribution<long> diag(1, maxEntry / 2);
  for (;;) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = 2 * diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
    }
    bool pd = true;
    for (std::size_t k = 1; k <= n && pd; ++k) {
      IntMatrix lead(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
      pd = leibnizDet(lead) > 0;
    }
    if (pd) return g;
  }
}

inline RationalMatrix randomSymmetricRational(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = q(num(rng), den(rng));
  return m;
}

// All v with Q(alpha + v) <= bound, found by scanning a box wide enough for any positive definite G:
// |x_i| <= sqrt(2 * bound * (G^{-1})_{ii}).
inline std::vector<IntVector> boxOracle(const GramLattice& l, const RationalVector& alpha, const Rational& bound) {
  const std::size_t n = l.dim();
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::sqrt(2 * bound.get_d() * l.gramInverse()(i, i).get_d()) + 1;
    lo[i] = static_cast<long>(std::floor(-r - alpha[i].get_d())) - 1;
    hi[i] = static_cast<long>(std::ceil(r - alpha[i].get_d())) + 1;
  }
  std::vector<IntVector> out;
  IntVector v = lo;
  for (;;) {
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = alpha[i] + v[i];
    if (l.quad(x) <= bound) out.push_back(v);
    std::size_t k = 0;
    while (k < n && ++v[k] > hi[k]) v[k] = lo[k], ++k;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
