#include <benchmark/benchmark.h>

#include "wrc/quad_field.hpp"

namespace {

void BM_FundamentalDiscSieve(benchmark::State& state) {
  long long x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(wrc::count_quadratic_q(x));
  state.SetItemsProcessed(state.iterations() * x);
}
BENCHMARK(BM_FundamentalDiscSieve)->Arg(100000)->Arg(1000000);

void BM_ClassNumberForms(benchmark::State& state) {
  long long d = -state.range(0);
  if (!wrc::is_fundamental_discriminant(d)) d = -3;
  for (auto _ : state) benchmark::DoNotOptimize(wrc::class_number(d));
}
BENCHMARK(BM_ClassNumberForms)->Arg(9999)->Arg(99999);

void BM_LValueAt1(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wrc::l_value(-state.range(0), 1).value.mid());
}
BENCHMARK(BM_LValueAt1)->Arg(9999)->Arg(99999)->Unit(benchmark::kMillisecond);

void BM_LValueAt2(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wrc::l_value(-4, 2, 1e-6).value.mid());
}
BENCHMARK(BM_LValueAt2)->Unit(benchmark::kMillisecond);

void BM_PrimeElements(benchmark::State& state) {
  wrc::QuadraticField k(-4);
  for (auto _ : state)
    benchmark::DoNotOptimize(k.prime_elements(state.range(0)).size());
}
BENCHMARK(BM_PrimeElements)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
