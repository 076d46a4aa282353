#include <benchmark/benchmark.h>

#include "stree/growth.hpp"
#include "stree/random.hpp"
#include "stree/suffix_tree.hpp"

namespace {

stree::Str input(std::size_t n, std::uint32_t sigma) {
    stree::SplitMix64 rng(n * 31 + sigma);
    return stree::random_string(n, stree::Alphabet(sigma), rng);
}

void BM_BuildNaive(benchmark::State& state) {
    auto s = input(static_cast<std::size_t>(state.range(0)), 2);
    std::size_t nodes = 0;
    for (auto _ : state) {
        auto tree = stree::build_naive(s);
        nodes = stree::node_count(tree);
        benchmark::DoNotOptimize(nodes);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildNaive)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_Compress(benchmark::State& state) {
    auto naive = stree::build_naive(input(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) {
        auto tree = stree::compress(naive);
        benchmark::DoNotOptimize(tree.nodes().data());
    }
}
BENCHMARK(BM_Compress)->RangeMultiplier(2)->Range(64, 2048);

void BM_GrowthOracle(benchmark::State& state) {
    auto s = input(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(stree::growth_oracle(s));
}
BENCHMARK(BM_GrowthOracle)->RangeMultiplier(4)->Range(64, 4096);

void BM_GrowthTree(benchmark::State& state) {
    auto tree = stree::build_naive(input(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(stree::growth_tree(tree));
}
BENCHMARK(BM_GrowthTree)->RangeMultiplier(4)->Range(64, 1024);

void BM_FindOccurrences(benchmark::State& state) {
    auto text = input(static_cast<std::size_t>(state.range(0)), 4);
    auto tree = stree::build_compact(text);
    auto pattern = stree::substring(text, 1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(stree::find_occurrences(tree, pattern));
}
BENCHMARK(BM_FindOccurrences)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace
