#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "thetarel/errors.hpp"
#include "thetarel/taylor.hpp"

using namespace thetarel;
using fixtures::q;

namespace {

Polynomial poly(std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  Polynomial p(3);
  for (const auto& [e, c] : terms) p.addTerm(e, Rational(c));
  return p;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(MultiIndex, OrderAndPrecedes) {
  MultiIndex a({1, 0}), b({0, 2}), c({2, 0}), z = MultiIndex::zero(2);
  EXPECT_TRUE(a < b);  // lower degree first
  EXPECT_TRUE(b < c);  // then lexicographic
  EXPECT_TRUE(z.precedes(b));
  EXPECT_TRUE(z.precedes(c));
  EXPECT_FALSE(a.precedes(c));  // parity differs
  EXPECT_FALSE(b.precedes(c));
  EXPECT_EQ(MultiIndex({2, 1, 3}).sum(), 6);
  EXPECT_EQ(MultiIndex({2, 1}).toString(), "(2,1)");
}

TEST(MultiIndex, EnumerationCounts) {
  for (std::size_t n : {1u, 2u, 3u, 4u})
    for (int s : {0, 1, 4, 6}) {
      auto all = multiIndicesUpTo(n, s);
      EXPECT_EQ(static_cast<long>(all.size()), binom(static_cast<long>(n) + s, s) - 1);
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  EXPECT_EQ(multiIndicesUpTo(4, 6).size(), 209u);  // 210 with the zero index
}

TEST(HatClosure, ReferenceSizes) {
  EXPECT_EQ(hatClosure(fixtures::referenceP0D4()).size(), 94u);
  EXPECT_EQ(hatClosure(fixtures::referenceP0A2()).size(), 31u);
  EXPECT_EQ(hatClosure(fixtures::referenceP0A3()).size(), 43u);
}

TEST(HatClosure, IsTheDownwardClosure) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(0, 4);
  for (int t = 0; t < 30; ++t) {
    std::vector<MultiIndex> s;
    for (int k = 0; k < 5; ++k) s.push_back(MultiIndex({e(rng), e(rng), e(rng)}));
    auto h = hatClosure(s);
    std::set<std::vector<int>> hs;
    for (const auto& p : h) hs.insert(p.e);
    EXPECT_EQ(hs.size(), h.size());
    for (const auto& p : s) EXPECT_TRUE(hs.count(p.e));
    // brute force: everything below a member, and nothing else
    for (const auto& cand : multiIndicesUpTo(3, 12)) {
      bool below = false;
      for (const auto& p : s) below = below || cand.precedes(p);
      EXPECT_EQ(below, hs.count(cand.e) == 1) << cand.toString();
    }
    EXPECT_EQ(hatClosure(h).size(), h.size());
  }
}

TEST(GammaRatio, AgainstFloatingGamma) {
  for (long twice : {1L, 3L, 4L, 7L, 10L}) {
    HalfInteger k = HalfInteger::fromTwice(twice);
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b) {
        const double expect = std::tgamma(twice / 2.0 + a) / std::tgamma(twice / 2.0 + b);
        EXPECT_NEAR(gammaRatio(k, a, b).get_d(), expect, 1e-9 * std::abs(expect));
      }
  }
  // Gamma(1)/Gamma(0) vanishes, Gamma(0)/Gamma(1) is a pole
  EXPECT_EQ(gammaRatio(HalfInteger::fromInteger(0), 1, 0), Rational(0));
  EXPECT_THROW(gammaRatio(HalfInteger::fromInteger(0), 0, 1), DivisionError);
}

TEST(Pkpm, PinnedExamples) {
  const RationalMatrix m(IntMatrix{{2, 1}, {1, 2}});
  Polynomial cubic = pkpm(HalfInteger::fromInteger(1), MultiIndex({2, 1}), m);
  EXPECT_EQ(cubic, poly({{{0, 3, 0}, 32}, {{0, 2, 1}, 96}, {{0, 1, 2}, 72}, {{0, 0, 3}, 16},
                         {{1, 1, 0}, -24}, {{1, 0, 1}, -24}}));
  Polynomial quad = pkpm(HalfInteger::fromTwice(1), MultiIndex({2, 0}), m);
  EXPECT_EQ(quad, poly({{{1, 0, 0}, -4}, {{0, 2, 0}, 4}, {{0, 1, 1}, 4}, {{0, 0, 2}, 1}}));
  EXPECT_EQ(quad.toString(), "4*X1^2 + 4*X1*X2 + X2^2 - 4*X0");
}

TEST(Pkpm, LowDegreeClosedForms) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + t % 2;
    RationalMatrix m = fixtures::randomSymmetricRational(rng, n);
    const HalfInteger k = HalfInteger::fromTwice(1 + t);
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<int> e(n, 0);
      e[l] = 1;
      // p = e_l: 2 * (row l of M) . X
      Polynomial lin(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial::Exponent x(n + 1, 0);
        x[i + 1] = 1;
        lin.addTerm(x, 2 * m(l, i));
      }
      EXPECT_EQ(pkpm(k, MultiIndex(e), m), lin);
      // p = 2 e_l: -2 m_ll X0 + 2k (row l . X)^2
      e[l] = 2;
      Polynomial row(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial::Exponent x(n + 1, 0);
        x[i + 1] = 1;
        row.addTerm(x, m(l, i));
      }
      Polynomial expect = row * row;
      expect *= 2 * k.value();
      Polynomial::Exponent x0(n + 1, 0);
      x0[0] = 1;
      expect.addTerm(x0, -2 * m(l, l));
      EXPECT_EQ(pkpm(k, MultiIndex(e), m), expect);
    }
  }
}

TEST(Pkpm, EfficientFormMatchesDefinition) {
  std::mt19937_64 rng(47);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 4; ++t) {
      RationalMatrix m = fixtures::randomSymmetricRational(rng, n);
      const HalfInteger k = HalfInteger::fromTwice(static_cast<long>(n) + 2 * t);
      for (const auto& p : multiIndicesUpTo(n, 4)) EXPECT_EQ(pkpm(k, p, m), pkpmDefinition(k, p, m)) << p.toString();
    }
  }
}

TEST(Pkpm, ScaledEvaluatorMatchesDirectEvaluation) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> y(-30, 30), nn(0, 12);
  const RationalMatrix m(IntMatrix{{6, -3}, {-3, 6}});
  const HalfInteger k = HalfInteger::fromInteger(3);
  for (const auto& p : multiIndicesUpTo(2, 6)) {
    Polynomial poly = pkpm(k, p, m);
    ScaledEvaluator eval(poly, p.sum());
    for (int t = 0; t < 10; ++t) {
      const BigInt n = nn(rng), e = 3;
      std::vector<BigInt> yv = {y(rng), y(rng)};
      RationalVector pt = {Rational(n), Rational(yv[0]) / 3, Rational(yv[1]) / 3};
      EXPECT_EQ(eval(n, yv, e), poly.evaluate(pt));
    }
  }
}

TEST(Polynomial, RingOperations) {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1), one = Polynomial::constant(2, 1);
  Polynomial s = (x + y).pow(3);
  EXPECT_EQ(s.coefficient({2, 1}), 3);
  EXPECT_EQ(s.totalDegree(), 3);
  EXPECT_EQ(((x + one) * (x - one)), x * x - one);
  EXPECT_EQ(s.evaluate({q(1, 2), q(1, 2)}), 1);
  EXPECT_TRUE((x - x).isZero());
}
