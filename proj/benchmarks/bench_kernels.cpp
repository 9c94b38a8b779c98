#include <benchmark/benchmark.h>

#include "mdl/families.hpp"
#include "mdl/ilp.hpp"
#include "mdl/resolving.hpp"
#include "mdl/strong.hpp"

using namespace mdl;

namespace {

void BM_KneserGenerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(kneser(n, k));
}
BENCHMARK(BM_KneserGenerate)->Args({9, 3})->Args({12, 5})->Unit(benchmark::kMillisecond);

void BM_AllPairsBfs(benchmark::State& state) {
    Graph g = kneser(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsBfs)->Args({9, 3})->Args({12, 5})->Unit(benchmark::kMillisecond);

void BM_MaxIndependentSet(benchmark::State& state) {
    Graph g = kneser(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g));
}
BENCHMARK(BM_MaxIndependentSet)->Args({8, 3})->Args({9, 4})->Unit(benchmark::kMillisecond);

void BM_StrongDimension(benchmark::State& state) {
    Graph g = kneser(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(strong_metric_dimension_exact(g));
}
BENCHMARK(BM_StrongDimension)->Args({7, 3})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_MetricDimension(benchmark::State& state) {
    Graph g = johnson(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(metric_dimension_exact(g));
}
BENCHMARK(BM_MetricDimension)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DoublyDimension(benchmark::State& state) {
    Graph g = johnson(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(doubly_metric_dimension_exact(g));
}
BENCHMARK(BM_DoublyDimension)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_WriteLp(benchmark::State& state) {
    DistanceMatrix dm = all_pairs_distances(kneser(7, 3));
    IlpModel model = build_strong_ilp(dm);
    for (auto _ : state) benchmark::DoNotOptimize(write_lp(model));
}
BENCHMARK(BM_WriteLp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
