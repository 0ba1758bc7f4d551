#include <benchmark/benchmark.h>

#include <vector>

#include "bollobas/constructions.hpp"
#include "bollobas/weights.hpp"

namespace {

void BM_InverseSumExpandedChain(benchmark::State& state) {
    const auto f = bollobas::type_expansion(bollobas::chain_family_d3(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(bollobas::inverse_multinomial_sum(f));
    state.counters["members"] = static_cast<double>(f.size());
}
BENCHMARK(BM_InverseSumExpandedChain)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_TuzaSumMatchbox(benchmark::State& state) {
    const std::vector<int> a{2, 3, static_cast<int>(state.range(0))};
    const auto f = bollobas::matchbox_weak_family(a);
    const std::vector<bollobas::ExactRational> p{bollobas::ExactRational(bollobas::BigInt(1), bollobas::BigInt(5)),
                                                 bollobas::ExactRational(bollobas::BigInt(1), bollobas::BigInt(2)),
                                                 bollobas::ExactRational(bollobas::BigInt(3), bollobas::BigInt(10))};
    for (auto _ : state) benchmark::DoNotOptimize(bollobas::tuza_product_sum(f, p));
    state.counters["members"] = static_cast<double>(f.size());
}
BENCHMARK(BM_TuzaSumMatchbox)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
