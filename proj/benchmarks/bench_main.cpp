#include <benchmark/benchmark.h>

#include "thetarel/enumeration.hpp"
#include "thetarel/p0search.hpp"
#include "thetarel/qseries.hpp"
#include "thetarel/relations.hpp"

using namespace thetarel;

namespace {

Rational third(long a) { return Rational(a, 3); }

void BM_CyclotomicMul(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  Cyclotomic a(m), b(m);
  for (unsigned k = 0; k < eulerPhi(m); ++k) {
    a.addRootMultiple(Rational(static_cast<long>(k) + 1, 7), k);
    b.addRootMultiple(Rational(3 - static_cast<long>(k), 5), k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(3)->Arg(8)->Arg(15);

void BM_CosetEnumeration(benchmark::State& state) {
  GramLattice l(gramD4());
  const Rational bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vectorsInCosetBounded(l, {0, 0, 0, 0}, bound, safeCBound(l)));
}
BENCHMARK(BM_CosetEnumeration)->Arg(2)->Arg(4)->Arg(6);

void BM_Pkpm(benchmark::State& state) {
  const RationalMatrix m(IntMatrix{{4, -2, 0, 0}, {-2, 4, -2, -2}, {0, -2, 4, 0}, {0, -2, 0, 4}});
  const MultiIndex p({static_cast<int>(state.range(0)), 1, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(pkpm(HalfInteger::fromInteger(4), p, m));
}
BENCHMARK(BM_Pkpm)->Arg(0)->Arg(2)->Arg(4);

void BM_FindP0A2(benchmark::State& state) {
  GramLattice r = GramLattice(gramA2()).rescaled(3);
  for (auto _ : state) benchmark::DoNotOptimize(findP0(r));
}
BENCHMARK(BM_FindP0A2)->Unit(benchmark::kMillisecond);

void BM_ThetaVectorsA2(benchmark::State& state) {
  GramLattice l(gramA2());
  GramLattice r = l.rescaled(3);
  const auto index = buildIndexSet(hatClosure(findP0(r).p0), l.level(), 3, l.dim());
  ThetaBuilder b(l, 3, index);
  const std::vector<RationalVector> al = {{0, 0}, {third(2), third(1)}, {third(1), third(2)}};
  const std::vector<RationalVector> be = {{0, 0}, {third(1), third(1)}, {third(2), third(2)}};
  for (auto _ : state) benchmark::DoNotOptimize(findRelations(b.build(al, be)));
}
BENCHMARK(BM_ThetaVectorsA2)->Unit(benchmark::kMillisecond);

void BM_ThetaCubeSeries(benchmark::State& state) {
  GramLattice l(gramA2());
  const Rational trunc(state.range(0));
  for (auto _ : state) {
    auto s = thetaQexp(l, {third(2), third(1)}, {third(1), third(1)}, trunc);
    benchmark::DoNotOptimize(s.pow(3));
  }
}
BENCHMARK(BM_ThetaCubeSeries)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
