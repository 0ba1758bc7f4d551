#include <benchmark/benchmark.h>

#include "bollobas/classifier.hpp"
#include "bollobas/constructions.hpp"

namespace {

void BM_ClassifyLexFull(benchmark::State& state) {
    const auto f = bollobas::lex_full_family(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(bollobas::classify(f));
    state.counters["members"] = static_cast<double>(f.size());
}
BENCHMARK(BM_ClassifyLexFull)->DenseRange(4, 7);

void BM_ClassifyPermutationThreads(benchmark::State& state) {
    const auto f = bollobas::permutation_family(6);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bollobas::classify(f, threads));
}
BENCHMARK(BM_ClassifyPermutationThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace
