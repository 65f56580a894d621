#include <benchmark/benchmark.h>

#include "cremona/maps.hpp"

using namespace cremona;

static void BM_GcdOfComposition(benchmark::State& state) {
    const auto c = compose(sigma2_family(), sigma1());
    for (auto _ : state) benchmark::DoNotOptimize(primitive_part(c));
}
BENCHMARK(BM_GcdOfComposition);

static void BM_ComposeCubicPair(benchmark::State& state) {
    const auto [f, g] = cubic_example_pair();
    for (auto _ : state) benchmark::DoNotOptimize(compose(g, f));
}
BENCHMARK(BM_ComposeCubicPair);

static void BM_InverseCheckCubicPair(benchmark::State& state) {
    const auto [f, g] = cubic_example_pair();
    for (auto _ : state) benchmark::DoNotOptimize(is_inverse_pair(f, g));
}
BENCHMARK(BM_InverseCheckCubicPair);

static void BM_Jacobian(benchmark::State& state) {
    const auto f = cubic_example_pair().first;
    for (auto _ : state) benchmark::DoNotOptimize(jacobian(f));
}
BENCHMARK(BM_Jacobian);

static void BM_QuarticFamily(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quartic_collinear_family(3));
}
BENCHMARK(BM_QuarticFamily);
