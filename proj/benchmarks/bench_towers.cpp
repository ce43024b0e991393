#include <benchmark/benchmark.h>

#include "wrc/towers.hpp"

namespace {

void BM_EnumerateTowersQi(benchmark::State& state) {
  wrc::QuadraticField k(-4);
  for (auto _ : state)
    benchmark::DoNotOptimize(wrc::enumerate_towers(k, state.range(0)).size());
}
BENCHMARK(BM_EnumerateTowersQi)->Arg(1000)->Arg(10000)->Arg(100000)
    ->Unit(benchmark::kMillisecond);

void BM_CountTowersFieldSet(benchmark::State& state) {
  std::vector<long long> fields = {-4, -3, 5, 8, -7, -8, -11, 12, 13};
  for (auto _ : state) {
    auto tc = wrc::count_towers(fields, state.range(0), wrc::CountMode::kTower);
    benchmark::DoNotOptimize(tc.z_tilde);
  }
}
BENCHMARK(BM_CountTowersFieldSet)->Arg(10000)->Arg(100000)
    ->Unit(benchmark::kMillisecond);

void BM_TwoAdicTable(benchmark::State& state) {
  wrc::QuadraticField k(8);
  for (auto _ : state) {
    wrc::TwoAdicTable table(k);
    benchmark::DoNotOptimize(table.two_part_norm(wrc::QuadElt{1, 1}));
  }
}
BENCHMARK(BM_TwoAdicTable);

}  // namespace
