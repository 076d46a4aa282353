#include <benchmark/benchmark.h>

#include "stree/combinatorics.hpp"

namespace {

// mu is memoized, so after the first iteration this measures cache lookups
void BM_MuCached(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(stree::mu(static_cast<std::size_t>(state.range(0)), 5));
}
BENCHMARK(BM_MuCached)->Arg(20)->Arg(200);

void BM_Phi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(stree::phi(static_cast<std::size_t>(state.range(0)), 3));
}
BENCHMARK(BM_Phi)->Arg(10)->Arg(40);

void BM_OmegaDistribution(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(stree::omega_distribution(n, 2));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_OmegaDistribution)->DenseRange(10, 16, 3);

}  // namespace
