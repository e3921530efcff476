#include "zetaquad/epstein_zeta.hpp"
#include "zetaquad/zeta_derivs.hpp"

#include <benchmark/benchmark.h>

using namespace zetaquad;

static void BM_ZetaS1(benchmark::State& state) {
    const QuadraticForm q(1.3, 0.25, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_s1(q));
}
BENCHMARK(BM_ZetaS1);

static void BM_ZetaS1_SmallLambda(benchmark::State& state) {
    // nearly degenerate basis: large truncation radius
    const QuadraticForm q(1.0, 0.97, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_s1(q));
}
BENCHMARK(BM_ZetaS1_SmallLambda);

static void BM_ZetaDlp(benchmark::State& state) {
    const QuadraticForm q(1.3, 0.25, 0.9);
    const DerivDirection b{0.4, -0.1, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(zeta_dlp(q, b));
}
BENCHMARK(BM_ZetaDlp);

static void BM_NodeZetaTable(benchmark::State& state) {
    // the full per-node work of the O(h^5) weight precompute
    const QuadraticForm q(1.3, 0.25, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(node_zeta_table(q));
}
BENCHMARK(BM_NodeZetaTable);

static void BM_ZetaGeneral(benchmark::State& state) {
    const QuadraticForm q(1.3, 0.25, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_general(q, -0.7));
}
BENCHMARK(BM_ZetaGeneral);

BENCHMARK_MAIN();
