#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "skewbox/fences.hpp"
#include "skewbox/robust_stats.hpp"

namespace {

std::vector<double> lognormal_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::lognormal_distribution<double> d(0.0, 0.8);
    std::vector<double> v(n);
    for (double& x : v) x = d(gen);
    return v;
}

void BM_Quartiles(benchmark::State& state) {
    const auto values = lognormal_values(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        skewbox::Sample s(values);
        benchmark::DoNotOptimize(skewbox::quartiles(s));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Quartiles)->Range(32, 8192)->Complexity();

void BM_Medcouple(benchmark::State& state) {
    const skewbox::Sample s(lognormal_values(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(skewbox::medcouple(s));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Medcouple)->Range(32, 2048)->Complexity();

void BM_CappedMomentSkewness(benchmark::State& state) {
    const skewbox::Sample s(lognormal_values(static_cast<std::size_t>(state.range(0)), 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(skewbox::capped_moment_skewness(s));
    }
}
BENCHMARK(BM_CappedMomentSkewness)->Range(32, 8192);

void BM_ComputeFences(benchmark::State& state) {
    const skewbox::Sample s(lognormal_values(200, 4));
    const auto method = static_cast<skewbox::FenceMethod>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(skewbox::compute_fences(s, method));
    }
    state.SetLabel(std::string(skewbox::to_string(method)));
}
BENCHMARK(BM_ComputeFences)->DenseRange(0, 6);

}  // namespace
