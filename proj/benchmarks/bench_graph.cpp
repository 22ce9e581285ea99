#include <benchmark/benchmark.h>

#include "gg/graph.hpp"

namespace {

void BM_PowerLawGenerate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto g = gg::generate_power_law(n, 16.0, 2.1, 7);
        benchmark::DoNotOptimize(g.in_sources.data());
    }
}
BENCHMARK(BM_PowerLawGenerate)->Arg(10000)->Arg(100000);

void BM_CsrBuild(benchmark::State& state) {
    const auto g = gg::generate_power_law(
        static_cast<std::size_t>(state.range(0)), 16.0, 2.1, 7);
    const auto edges = g.edge_list();
    for (auto _ : state) {
        auto rebuilt = gg::build_graph(g.num_vertices(), edges, false);
        benchmark::DoNotOptimize(rebuilt.in_sources.data());
    }
}
BENCHMARK(BM_CsrBuild)->Arg(10000)->Arg(100000);

void BM_ReverseOrientation(benchmark::State& state) {
    const auto g = gg::generate_power_law(
        static_cast<std::size_t>(state.range(0)), 16.0, 2.1, 7);
    for (auto _ : state) {
        auto r = gg::reverse_orientation(g);
        benchmark::DoNotOptimize(r.in_sources.data());
    }
}
BENCHMARK(BM_ReverseOrientation)->Arg(10000);

}  // namespace
