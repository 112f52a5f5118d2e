#include <benchmark/benchmark.h>

#include "rootchi/cyclo.hpp"
#include "rootchi/frcomplex.hpp"
#include "rootchi/skein.hpp"

using namespace rootchi;

static void BM_HomflyTorusKnot(benchmark::State& state) {
  std::string word;
  for (int i = 0; i < state.range(0); ++i) word += " 1";
  LinkDiagram d = parse_braid("BR[2;" + word + "]");
  for (auto _ : state) benchmark::DoNotOptimize(homfly_unreduced(d));
}
BENCHMARK(BM_HomflyTorusKnot)->DenseRange(3, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_HomflyBraid(benchmark::State& state) {
  LinkDiagram d = parse_braid("BR[4; 1 -2 3 1 -2 3 -1 2 -3 2]");
  for (auto _ : state) benchmark::DoNotOptimize(homfly_unreduced(d));
}
BENCHMARK(BM_HomflyBraid)->Unit(benchmark::kMillisecond);

static void BM_CycloMultiply(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CycloNum x = root(n, 1) + CycloNum(2 * n, 3) - root(n, 5);
  CycloNum y = root(n, 2) - CycloNum(2 * n, 2) + root(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycloMultiply)->Arg(2)->Arg(6)->Arg(15)->Arg(30);

static void BM_KoszulHomology(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  GradedModule m;
  m.n = 3;
  m.degs = {0, 2, 4, 4};
  m.u.assign(k, QMatrix(4, 4));
  for (auto& u : m.u) {
    u(1, 0) = 1;
    u(2, 1) = 1;
  }
  FracComplex c = koszul_tensor(m);
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
}
BENCHMARK(BM_KoszulHomology)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_SpectralSequence(benchmark::State& state) {
  GradedModule m;
  m.n = 2;
  m.degs = {0, 2, 4};
  m.u.assign(3, QMatrix(3, 3));
  for (auto& u : m.u) {
    u(1, 0) = 1;
    u(2, 1) = 1;
  }
  FracComplex c = koszul_tensor(m);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_sequence(c));
}
BENCHMARK(BM_SpectralSequence)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
