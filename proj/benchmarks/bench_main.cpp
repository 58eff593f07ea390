#include <benchmark/benchmark.h>

#include "totalrank/dense_verify.hpp"
#include "totalrank/graph_io.hpp"
#include "totalrank/pagerank.hpp"
#include "totalrank/quadrature.hpp"
#include "totalrank/random_models.hpp"
#include "totalrank/series.hpp"

namespace {

using namespace totalrank;

TransitionMatrix make_graph(std::size_t n) {
    Rng rng(n);
    const auto g = random_strongly_connected_graph(n, 8 * n, rng);
    return build_transition(g, StochasticVector::uniform(n));
}

void BM_Matvec(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = make_graph(n);
    std::vector<double> v(n, 1.0 / n), out(n);
    for (auto _ : state) {
        matvec(h, v, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(h.nonzeros()));
}
BENCHMARK(BM_Matvec)->RangeMultiplier(4)->Range(256, 1 << 16);

void BM_PowerIteration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = make_graph(n);
    const auto o0 = StochasticVector::uniform(n);
    for (auto _ : state) benchmark::DoNotOptimize(power_iteration(h, o0, DampingFactor(0.85), 1e-10));
}
BENCHMARK(BM_PowerIteration)->RangeMultiplier(4)->Range(256, 1 << 14);

void BM_SeriesSum(benchmark::State& state) {
    const auto h = make_graph(1024);
    const auto o0 = StochasticVector::uniform(1024);
    const double tol = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_sum(h, o0, {.tol = tol}));
}
BENCHMARK(BM_SeriesSum)->RangeMultiplier(10)->Range(100, 100000);

void BM_Quadrature(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = make_graph(n);
    const auto o0 = StochasticVector::uniform(n);
    for (auto _ : state) benchmark::DoNotOptimize(marginalize_pagerank(h, o0));
}
BENCHMARK(BM_Quadrature)->Arg(16)->Arg(64)->Arg(256);

void BM_MercatorLog(benchmark::State& state) {
    Rng rng(7);
    const auto m = random_guarded_matrix(static_cast<std::size_t>(state.range(0)), 0.85, 0.9, rng);
    for (auto _ : state) benchmark::DoNotOptimize(mercator_log(m, 1e-10));
}
BENCHMARK(BM_MercatorLog)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
