#include <benchmark/benchmark.h>

#include "cremona/degeneration.hpp"
#include "cremona/enumeration.hpp"
#include "cremona/halphen.hpp"

using namespace cremona;

static void BM_EnumerateNoether(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_noether(state.range(0)));
}
BENCHMARK(BM_EnumerateNoether)->DenseRange(8, 20, 4);

static void BM_EnumerateProper(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_proper(state.range(0)));
}
BENCHMARK(BM_EnumerateProper)->DenseRange(8, 20, 4);

static void BM_HudsonLambda(benchmark::State& state) {
    const auto t = halphen::lambda_a(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hudson_test(t));
}
BENCHMARK(BM_HudsonLambda)->DenseRange(1, 5);

static void BM_ClosureTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(closure_equality_table(state.range(0)));
}
BENCHMARK(BM_ClosureTable)->Arg(12)->Arg(16);

static void BM_Obstruction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(halphen::obstruction_candidates(state.range(0), state.range(1)));
}
BENCHMARK(BM_Obstruction)->Args({1, 1})->Args({2, 2})->Args({3, 3});
