#include "zetaquad/nystrom.hpp"

#include <benchmark/benchmark.h>

using namespace zetaquad;

namespace {
std::shared_ptr<TorusGrid> grid_of(int n) {
    return std::make_shared<TorusGrid>(std::make_shared<TorusSurface>(1.0, 0.5), n, n);
}
} // namespace

static void BM_WeightPrecompute(benchmark::State& state) {
    const auto grid = grid_of(static_cast<int>(state.range(0)));
    const std::vector<KernelComponent> comps = {
        {Complex(1, 0), KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}}};
    for (auto _ : state) {
        NystromOperator op(grid, comps, 5);
        benchmark::DoNotOptimize(op.stencil_table().size());
    }
    state.SetItemsProcessed(state.iterations() * grid->size());
}
BENCHMARK(BM_WeightPrecompute)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ApplyLaplaceDLP(benchmark::State& state) {
    const auto grid = grid_of(static_cast<int>(state.range(0)));
    const NystromOperator op(
        grid, {{Complex(1, 0), KernelSpec{Equation::Laplace, Layer::DoubleLayer, {}}}}, 5);
    const CVector x = CVector::Ones(grid->size());
    for (auto _ : state) benchmark::DoNotOptimize(op.apply(x));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid->size()) * grid->size());
}
BENCHMARK(BM_ApplyLaplaceDLP)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ApplyHelmholtzCombined(benchmark::State& state) {
    const auto grid = grid_of(static_cast<int>(state.range(0)));
    const Complex kap{1.42, 1.11};
    const NystromOperator op(grid,
                             {{Complex(1, 0), KernelSpec{Equation::Helmholtz, Layer::DoubleLayer, kap}},
                              {Complex(0, -1.42), KernelSpec{Equation::Helmholtz, Layer::SingleLayer, kap}}},
                             5);
    const CVector x = CVector::Ones(grid->size());
    for (auto _ : state) benchmark::DoNotOptimize(op.apply(x));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid->size()) * grid->size());
}
BENCHMARK(BM_ApplyHelmholtzCombined)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
