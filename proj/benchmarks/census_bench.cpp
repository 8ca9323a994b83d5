#include <benchmark/benchmark.h>

#include "wt/census.hpp"

namespace {

void BM_SeriesCoefficients(benchmark::State& state) {
    const auto w = wt::wt_graphs_series();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wt::series_coefficients(w, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_SeriesCoefficients)->Arg(50)->Arg(200)->Arg(1000);

void BM_LongDivision(benchmark::State& state) {
    const auto w = wt::wt_graphs_series();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wt::series_long_division(w, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_LongDivision)->Arg(50)->Arg(200);

void BM_AssembleIndecomposable(benchmark::State& state) {
    const auto h = wt::indecomposable_graphs_series();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wt::series_coefficients(wt::assemble(h), 100));
    }
}
BENCHMARK(BM_AssembleIndecomposable);

}  // namespace
