#include <benchmark/benchmark.h>

#include <random>

#include "origami/presentation.hpp"
#include "origami/rewrite.hpp"

using namespace origami;

static void BM_KbCompleteJones(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = jones_presentation(n);
  for (auto _ : state) {
    RewriteSystem rs = kb_complete(p);
    benchmark::DoNotOptimize(rs.rules().size());
  }
}
BENCHMARK(BM_KbCompleteJones)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_KbCompleteOrigami(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = origami_presentation(n, true);
  for (auto _ : state) {
    RewriteSystem rs = kb_complete(p);
    benchmark::DoNotOptimize(rs.rules().size());
  }
}
BENCHMARK(BM_KbCompleteOrigami)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Normalize(benchmark::State& state) {
  const int n = 4;
  RewriteSystem rs = kb_complete(origami_presentation(n, true));
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> kind(0, 1);
  std::vector<Word> inputs;
  for (int i = 0; i < 64; ++i) {
    Word w;
    for (int j = 0; j < static_cast<int>(state.range(0)); ++j) {
      w.push_back({static_cast<Kind>(kind(rng)), idx(rng)});
    }
    inputs.push_back(std::move(w));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs.normalize(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_CountIrreducible(benchmark::State& state) {
  RewriteSystem rs = kb_complete(origami_presentation(4, true));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_irreducible(rs));
  }
}
BENCHMARK(BM_CountIrreducible)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
