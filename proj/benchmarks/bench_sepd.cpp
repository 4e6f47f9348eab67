#include <benchmark/benchmark.h>

#include "skewbox/sepd.hpp"

namespace {

void BM_SepdConstruct(benchmark::State& state) {
    for (auto _ : state) {
        skewbox::SepdEvaluator ev(skewbox::SepdParams{.alpha = 0.3, .p = 1.5});
        benchmark::DoNotOptimize(ev.normalizer());
    }
}
BENCHMARK(BM_SepdConstruct);

void BM_SepdPdf(benchmark::State& state) {
    const skewbox::SepdEvaluator ev(skewbox::SepdParams{.alpha = 0.3, .p = 1.5});
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.pdf(x));
        x = x > 3.0 ? -3.0 : x + 0.01;
    }
}
BENCHMARK(BM_SepdPdf);

void BM_SepdCdf(benchmark::State& state) {
    const skewbox::SepdEvaluator ev(skewbox::SepdParams{.alpha = 0.3, .p = 1.5});
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.cdf(x));
        x = x > 3.0 ? -3.0 : x + 0.01;
    }
}
BENCHMARK(BM_SepdCdf);

void BM_SepdQuantile(benchmark::State& state) {
    const skewbox::SepdEvaluator ev(skewbox::SepdParams{.alpha = 0.3, .p = 1.5});
    double u = 0.001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.quantile(u));
        u = u > 0.998 ? 0.001 : u + 0.001;
    }
}
BENCHMARK(BM_SepdQuantile);

void BM_SepdSample(benchmark::State& state) {
    const skewbox::SepdEvaluator ev(skewbox::SepdParams{.alpha = 0.3, .p = 1.5});
    skewbox::RandomStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.sample_values(rng, static_cast<std::size_t>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SepdSample)->Arg(20)->Arg(100)->Arg(1000);

}  // namespace
