#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "thetarel/enumeration.hpp"
#include "thetarel/p0search.hpp"
#include "thetarel/qseries.hpp"

using namespace thetarel;
using fixtures::q;

namespace {

Cyclotomic one(unsigned m = 1) { return Cyclotomic(m, Rational(1)); }

RationalVector solveG(const GramLattice& l, const Monomial& m) {
  RationalVector out(l.dim());
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b) out[a] += l.gramInverse()(a, b) * m[b];
  return out;
}

JacobiQSeries randomSeries(std::mt19937_64& rng, const Rational& trunc) {
  std::uniform_int_distribution<long> e(-2, 2), c(-3, 3), ex(0, 8);
  JacobiQSeries s(2, trunc);
  for (int i = 0; i < 6; ++i)
    s.addTerm(q(ex(rng), 2), {e(rng), e(rng)}, Cyclotomic(3u, Rational(c(rng))) + Cyclotomic::rootOfUnity(3, e(rng)));
  return s;
}

}  // namespace

TEST(ThetaQexp, RepresentationNumbersOfD4) {
  GramLattice l(gramD4());
  auto th = thetaQexp(l, {0, 0, 0, 0}, {0, 0, 0, 0}, 6);
  std::map<Rational, long> counts;
  for (const auto& cv : vectorsInCosetBounded(l, {0, 0, 0, 0}, 5, safeCBound(l))) ++counts[cv.q];
  std::map<Rational, long> got;
  for (const auto& [r, lp] : th.terms())
    for (const auto& [m, c] : lp) {
      ASSERT_TRUE(c.isRational());
      got[r] += c.constantTerm().get_num().get_si();
    }
  EXPECT_EQ(got, counts);
  // 1 + 24q + 24q^2 + 96q^3 + 24q^4 + 144q^5
  EXPECT_EQ(got, (std::map<Rational, long>{{0, 1}, {1, 24}, {2, 24}, {3, 96}, {4, 24}, {5, 144}}));
}

TEST(ThetaQexp, SignsFollowTheCharacter) {
  GramLattice l(gramD4());
  const RationalVector alpha = {q(1, 2), 0, q(1, 2), 0};
  auto th = thetaQexp(l, alpha, {0, q(1, 2), 0, 0}, 4);
  std::size_t seen = 0;
  for (const auto& [r, lp] : th.terms())
    for (const auto& [m, c] : lp) {
      RationalVector x = solveG(l, m);
      EXPECT_EQ(l.quad(x), r);
      // v = x - alpha is integral and the sign is (-1)^{v1 + v3 + v4}
      const Rational v1 = x[0] - alpha[0], v3 = x[2] - alpha[2], v4 = x[3] - alpha[3];
      ASSERT_TRUE(isIntegral(v1) && isIntegral(v3) && isIntegral(v4));
      const long odd = Rational(v1 + v3 + v4).get_num().get_si();
      const long sign = (odd % 2 == 0) ? 1 : -1;
      EXPECT_EQ(c, Cyclotomic(1u, Rational(sign)));
      ++seen;
    }
  EXPECT_GT(seen, 20u);
}

TEST(JacobiQSeries, ProductIsCommutativeAndAssociative) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    auto a = randomSeries(rng, 4), b = randomSeries(rng, 4), c = randomSeries(rng, 4);
    EXPECT_EQ((a * b).terms(), (b * a).terms());
    EXPECT_EQ(((a * b) * c).terms(), (a * (b * c)).terms());
    EXPECT_EQ(a.pow(3).terms(), (a * a * a).terms());
  }
}

TEST(JacobiQSeries, TruncationDropsHighTerms) {
  JacobiQSeries s(1, 2);
  s.addTerm(2, {0}, one());
  s.addTerm(q(3, 2), {1}, one());
  EXPECT_EQ(s.termCount(), 1u);
  EXPECT_EQ((s * s).termCount(), 0u);
  EXPECT_EQ(s.dump(), "# truncation 2, 1 variables\nq^3/2 z^(1) : 1\n");
}

TEST(ThetaQexp, ShiftCovariance) {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> w(-2, 2);
  GramLattice l(gramA2());
  const Rational t = q(1, 3), tt = q(2, 3);
  for (const auto& alpha : std::vector<RationalVector>{{0, 0}, {tt, t}, {t, tt}})
    for (const auto& beta : std::vector<RationalVector>{{0, 0}, {t, t}, {tt, tt}}) {
      const IntVector shift = {w(rng), w(rng)};
      RationalVector moved = alpha;
      for (std::size_t i = 0; i < 2; ++i) moved[i] += shift[i];
      auto a = thetaQexp(l, alpha, beta, 4), b = thetaQexp(l, moved, beta, 4);
      // theta_{alpha + w, beta} = e(-B(beta, w)) theta_{alpha, beta}
      const Rational phase = -l.bilinear(beta, toRational(shift));
      const Cyclotomic unit = Cyclotomic::rootOfUnity(3, Rational(phase * 3).get_num().get_si());
      a *= unit;
      EXPECT_EQ(a.terms(), b.terms());
      EXPECT_EQ(a.pow(3).terms(), thetaQexp(l, moved, beta, 4).pow(3).terms());
    }
}

TEST(EvaluateRelation, TrueAndMutatedIdentity) {
  GramLattice l(gramA2());
  const Rational t = q(1, 3), tt = q(2, 3);
  const ThetaLabel dep{{tt, t}, {t, t}};
  std::vector<ThetaLabel> basis = {{{0, 0}, {0, 0}}, {{0, 0}, {t, t}}, {{tt, t}, {0, 0}}};
  std::vector<Cyclotomic> coeffs = {one() * Rational(-1), one(), one()};
  EXPECT_TRUE(evaluateRelation(l, 3, dep, basis, coeffs, 10).isZero());
  coeffs[0] = one() * Rational(-2);
  EXPECT_FALSE(evaluateRelation(l, 3, dep, basis, coeffs, 10).isZero());
  EXPECT_TRUE(combinationSeries(l, 3, {}, {}, 5).isZero());
}

TEST(PartialQexp, OddWeightVanishesAtZero) {
  GramLattice l(gramD4());
  for (const auto& p : multiIndicesUpTo(4, 5))
    if (p.sum() % 2 == 1) EXPECT_TRUE(thetaPartialQexp(l, {0, 0, 0, 0}, p, 4).coeffs.empty()) << p.toString();
}

TEST(PartialQexp, RootSumOfSquares) {
  GramLattice l(gramD4());
  Rational expect = 0;
  for (const auto& cv : vectorsInCosetBounded(l, {0, 0, 0, 0}, 1, safeCBound(l)))
    if (cv.q == 1) {
      const Rational b = l.pairWithBasis(toRational(cv.v))[3];
      expect += b * b;
    }
  auto s = thetaPartialQexp(l, {0, 0, 0, 0}, MultiIndex({0, 0, 0, 2}), 2);
  EXPECT_EQ(s.coeffs.at(1), expect);
  EXPECT_EQ(expect, 24);  // sum over roots of B(v,w)^2 is 2h B(w,w), Coxeter number h = 6
}

TEST(DkpOfCombination, AgreesWithThetaVectorsOnA2) {
  GramLattice l(gramA2());
  const Rational t = q(1, 3), tt = q(2, 3);
  auto index = buildIndexSet(hatClosure(fixtures::referenceP0A2()), 3, 3, 2);
  ThetaBuilder b(l, 3, index);
  auto vs = b.build({{0, 0}, {tt, t}, {t, tt}}, {{0, 0}, {t, t}, {tt, tt}});
  long nMax = 0;
  for (const auto& e : index) nMax = std::max(nMax, e.n);
  for (const auto& v : vs) {
    auto s = combinationSeries(l, 3, {v.label}, {one()}, Rational(nMax + 1));
    auto d = dkpOfCombination(l, 3, s, index);
    ASSERT_EQ(d.size(), v.entries.size());
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], v.entries[i]) << i;
  }
}

TEST(DkpOfCombination, ZeroCombination) {
  GramLattice l(gramA2());
  auto m = dkpOfCombination(l, 3, {}, {}, MultiIndex({1, 1}), 3);
  for (const auto& [n, c] : m) EXPECT_TRUE(c.isZero());
}
