#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "thetarel/enumeration.hpp"
#include "thetarel/errors.hpp"

using namespace thetarel;
using fixtures::q;

namespace {

std::vector<IntVector> enumerated(const GramLattice& l, const RationalVector& alpha, const Rational& bound) {
  std::vector<IntVector> out;
  for (const auto& cv : vectorsInCosetBounded(l, alpha, bound, safeCBound(l))) {
    RationalVector x(l.dim());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = alpha[i] + cv.v[i];
    EXPECT_EQ(cv.q, l.quad(x));
    out.push_back(cv.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Enumeration, SafeBoundDominatesSquaredNorm) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> e(-20, 20);
  for (const auto& g : {gramD4(), gramA2(), gramA3(), gramE8()}) {
    GramLattice l(g);
    const Rational c = safeCBound(l);
    for (int t = 0; t < 50; ++t) {
      RationalVector x(l.dim());
      Rational sq = 0;
      for (auto& xi : x) {
        xi = q(e(rng), 7);
        sq += xi * xi;
      }
      EXPECT_LE(sq, c * l.quad(x));
    }
  }
}

TEST(Enumeration, MatchesBoxOracleOnStandardCosets) {
  GramLattice d4(gramD4());
  EXPECT_EQ(enumerated(d4, {0, 0, 0, 0}, 2), fixtures::boxOracle(d4, {0, 0, 0, 0}, 2));
  EXPECT_EQ(enumerated(d4, {q(1, 2), 0, q(1, 2), 0}, q(5, 2)), fixtures::boxOracle(d4, {q(1, 2), 0, q(1, 2), 0}, q(5, 2)));
  GramLattice a2(gramA2());
  EXPECT_EQ(enumerated(a2, {q(2, 3), q(1, 3)}, 7), fixtures::boxOracle(a2, {q(2, 3), q(1, 3)}, 7));
}

TEST(Enumeration, StreamOrderIsDeterministicAndResettable) {
  GramLattice a3(gramA3());
  CosetVectorStream s(a3, {q(1, 2), 0, q(1, 2)}, 3, safeCBound(a3));
  std::vector<IntVector> first, second;
  CosetVector cv;
  while (s.next(cv)) first.push_back(cv.v);
  s.reset();
  while (s.next(cv)) second.push_back(cv.v);
  EXPECT_EQ(first, second);
  EXPECT_FALSE(first.empty());
  // zero is tried first in every coordinate
  CosetVectorStream z(a3, {0, 0, 0}, 1, safeCBound(a3));
  ASSERT_TRUE(z.next(cv));
  EXPECT_EQ(cv.v, (IntVector{0, 0, 0}));
}

TEST(Enumeration, NegativeBoundIsEmpty) {
  GramLattice a2(gramA2());
  EXPECT_TRUE(vectorsInCosetBounded(a2, {0, 0}, -1, safeCBound(a2)).empty());
}

TEST(Enumeration, MinimalVectors) {
  auto count = [](const IntMatrix& g, const RationalVector& a) {
    GramLattice l(g);
    return minVectors(l, a);
  };
  auto d4 = count(gramD4(), {0, 0, 0, 0});
  EXPECT_EQ(d4.minimum, 0);
  EXPECT_EQ(d4.vectors.size(), 1u);
  auto a2 = count(gramA2(), {q(2, 3), q(1, 3)});
  EXPECT_EQ(a2.minimum, q(1, 3));
  EXPECT_EQ(a2.vectors.size(), 3u);
  auto d4h = count(gramD4(), {q(1, 2), 0, q(1, 2), 0});
  EXPECT_EQ(d4h.minimum, q(1, 2));
  EXPECT_EQ(d4h.vectors.size(), 8u);
}

TEST(Enumeration, RootCounts) {
  auto shell = [](const IntMatrix& g, const Rational& n) {
    GramLattice l(g);
    std::size_t k = 0;
    for (const auto& cv : vectorsInCosetBounded(l, RationalVector(l.dim(), 0), n, safeCBound(l)))
      if (cv.q == n) ++k;
    return k;
  };
  EXPECT_EQ(shell(gramD4(), 1), 24u);
  EXPECT_EQ(shell(gramA2(), 1), 6u);
  EXPECT_EQ(shell(gramA3(), 1), 12u);
}

TEST(Enumeration, TuplesAgainstNestedLoops) {
  const std::vector<Rational> w = {0, q(1, 3), q(1, 3), 1, q(4, 3), 2, 2, 3};
  for (int count : {1, 2, 3}) {
    for (const Rational& cap : {Rational(0), Rational(1), q(7, 3), Rational(4)}) {
      std::vector<std::vector<std::size_t>> seen;
      forEachTupleBounded(w, count, cap, [&](const std::vector<std::size_t>& t, const Rational& s) {
        Rational check = 0;
        for (auto i : t) check += w[i];
        EXPECT_EQ(check, s);
        seen.push_back(t);
      });
      std::vector<std::vector<std::size_t>> expect;
      std::vector<std::size_t> t(static_cast<std::size_t>(count), 0);
      for (;;) {
        Rational s = 0;
        for (auto i : t) s += w[i];
        if (s <= cap) expect.push_back(t);
        std::size_t k = 0;
        while (k < t.size() && ++t[k] == w.size()) t[k++] = 0;
        if (k == t.size()) break;
      }
      std::sort(seen.begin(), seen.end());
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(seen, expect) << count << " " << cap;
    }
  }
  auto exact = tuplesWithQSum(w, 2, 2);
  for (const auto& t : exact) EXPECT_EQ(w[t[0]] + w[t[1]], 2);
  EXPECT_EQ(exact.size(), 5u);  // 0+2 and 2+0 with two weight-2 entries, plus 1+1
  EXPECT_THROW(forEachTupleBounded({1, 0}, 2, 3, [](const auto&, const auto&) {}), PreconditionError);
}
