#include <benchmark/benchmark.h>

#include "wrc/perm_group.hpp"

namespace {

void BM_GenerateS6(benchmark::State& state) {
  for (auto _ : state) {
    auto g = wrc::PermGroup::symmetric(6);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GenerateS6);

void BM_ConjugacyClassesWreath(benchmark::State& state) {
  auto w = wrc::wreath_product(wrc::PermGroup::cyclic(2),
                               wrc::PermGroup::symmetric(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    wrc::ClassTable table(w);
    benchmark::DoNotOptimize(table.classes().size());
  }
}
BENCHMARK(BM_ConjugacyClassesWreath)->Arg(3)->Arg(4);

void BM_BInvariant(benchmark::State& state) {
  auto w = wrc::wreath_product(wrc::PermGroup::cyclic(2), wrc::PermGroup::cyclic(4));
  for (auto _ : state) benchmark::DoNotOptimize(wrc::b_invariant_q(w));
}
BENCHMARK(BM_BInvariant);

void BM_WreathDecompose(benchmark::State& state) {
  auto w = wrc::wreath_product(wrc::PermGroup::symmetric(3), wrc::PermGroup::cyclic(2));
  for (auto _ : state) {
    auto dec = wrc::wreath_decompose(w);
    benchmark::DoNotOptimize(dec->block_size);
  }
}
BENCHMARK(BM_WreathDecompose);

}  // namespace
