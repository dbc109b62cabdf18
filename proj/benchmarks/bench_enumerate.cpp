#include <benchmark/benchmark.h>

#include "origami/congruence.hpp"
#include "origami/greens.hpp"
#include "origami/presentation.hpp"

using namespace origami;

static void BM_TcJones(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = jones_presentation(n);
  for (auto _ : state) {
    MonoidTable m = tc_enumerate(p);
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_TcJones)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

static void BM_TcOrigami(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = origami_presentation(n, true);
  for (auto _ : state) {
    MonoidTable m = tc_enumerate(p);
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_TcOrigami)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_GreensOrigami(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MonoidTable m = tc_enumerate(origami_presentation(n, true));
  for (auto _ : state) {
    GreensStructure g = compute_greens(m);
    benchmark::DoNotOptimize(g.d_count());
  }
}
BENCHMARK(BM_GreensOrigami)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ProductFold(benchmark::State& state) {
  MonoidTable m = tc_enumerate(origami_presentation(5, true));
  ElementId a = m.size() / 3;
  ElementId b = m.size() / 2;
  for (auto _ : state) {
    a = m.product(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ProductFold);

BENCHMARK_MAIN();
