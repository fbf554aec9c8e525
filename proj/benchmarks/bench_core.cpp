#include <benchmark/benchmark.h>

#include "latsens/bounds.hpp"
#include "latsens/constructions.hpp"
#include "latsens/search.hpp"

using namespace latsens;

namespace {

// Word-parallel kernel vs the per-input probe loop, over the input count.
void BM_SensitivityBitmap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TruthTable t = random_table(n, 1);
  for (auto _ : state) {
    auto counts = sensitivity_bitmap(t);
    benchmark::DoNotOptimize(counts.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.size()));
}
BENCHMARK(BM_SensitivityBitmap)->Arg(10)->Arg(16)->Arg(20);

void BM_SensitivityNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TruthTable t = random_table(n, 1);
  for (auto _ : state) {
    int best = 0;
    for (uint64_t x = 0; x < t.size(); ++x)
      best = std::max(best, sensitivity_at(t, x));
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.size()));
}
BENCHMARK(BM_SensitivityNaive)->Arg(10)->Arg(16);

void BM_BlockSensitivityRubinstein(benchmark::State& state) {
  auto f = rubinstein_f(static_cast<int>(state.range(0)));
  MeasureLimits lim;
  lim.threads = 1;
  for (auto _ : state) {
    auto bs = block_sensitivity(*f.table, lim);
    benchmark::DoNotOptimize(bs.value);
  }
}
BENCHMARK(BM_BlockSensitivityRubinstein)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_SliceColoringExactScan(benchmark::State& state) {
  auto c = slice_coloring(2);
  ScanLimits lim;
  lim.threads = 1;
  for (auto _ : state) {
    auto rep = exact_report(*c, lim);
    benchmark::DoNotOptimize(rep.r);
  }
  state.SetItemsProcessed(state.iterations() * 117649);  // 7^6 points
}
BENCHMARK(BM_SliceColoringExactScan)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = exhaustive_scan(n, 1);
    benchmark::DoNotOptimize(res.functions_scanned);
  }
}
BENCHMARK(BM_ExhaustiveScan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MaxIndependentSet(benchmark::State& state) {
  // Pseudo-random graph on d vertices, fixed seed.
  const int d = static_cast<int>(state.range(0));
  std::vector<uint32_t> adj(d, 0);
  uint64_t lcg = 0x2545F4914F6CDD1Dull;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
      if ((lcg >> 33) % 3 == 0) {
        adj[i] |= uint32_t{1} << j;
        adj[j] |= uint32_t{1} << i;
      }
    }
  for (auto _ : state) {
    int best = max_independent_set(adj);
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_MaxIndependentSet)->Arg(15)->Arg(24)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
