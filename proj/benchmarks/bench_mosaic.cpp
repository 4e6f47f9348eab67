#include <benchmark/benchmark.h>

#include "skewbox/mosaic.hpp"

namespace {

skewbox::SimConfig cell_config(skewbox::Scenario sc, int n) {
    skewbox::SimConfig c;
    c.scenario = sc;
    c.method = skewbox::FenceMethod::hubert;
    c.n = n;
    c.reps = 50;
    c.seed = 9;
    return c;
}

void BM_SwampingCell(benchmark::State& state) {
    const auto grid = skewbox::GridSpec::make(0.3, 0.3, 1, 1.5, 1.5, 1);
    const auto config = cell_config(skewbox::Scenario::swamping,
                                    static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(skewbox::run_cell(grid, 0, 0, config));
    }
    state.SetItemsProcessed(state.iterations() * config.reps);
}
BENCHMARK(BM_SwampingCell)->Arg(20)->Arg(100);

void BM_MaskingCell(benchmark::State& state) {
    const auto grid = skewbox::GridSpec::make(0.3, 0.3, 1, 1.5, 1.5, 1);
    const auto config = cell_config(skewbox::Scenario::masking,
                                    static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(skewbox::run_cell(grid, 0, 0, config));
    }
    state.SetItemsProcessed(state.iterations() * config.reps);
}
BENCHMARK(BM_MaskingCell)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
