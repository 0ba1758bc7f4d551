#include <benchmark/benchmark.h>

#include "bollobas/extremal.hpp"
#include "bollobas/perm_oracle.hpp"
#include "bollobas/constructions.hpp"

namespace {

// Max clique over interval compositions, full-only mode.
void BM_NBollobas(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int s = static_cast<int>(state.range(1));
    std::size_t nodes = 0;
    for (auto _ : state) {
        const auto o = bollobas::n_bollobas(d, s);
        nodes = o.search_nodes;
        benchmark::DoNotOptimize(o.value);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_NBollobas)->Args({3, 10})->Args({4, 6})->Args({4, 8})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_NBollobasGeneral(benchmark::State& state) {
    const bollobas::SearchOptions options{bollobas::SearchMode::general, bollobas::kDefaultVertexCap};
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bollobas::n_bollobas(3, s, options).value);
}
BENCHMARK(BM_NBollobasGeneral)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// Brute force over block-preserving permutations of the support.
void BM_DoubleCount(benchmark::State& state) {
    const auto f = bollobas::chain_family_d3(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bollobas::double_count_identity(f).rhs);
}
BENCHMARK(BM_DoubleCount)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

}  // namespace
