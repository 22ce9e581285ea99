#include <benchmark/benchmark.h>

#include "gg/algorithms.hpp"
#include "gg/engine.hpp"
#include "gg/graph.hpp"

namespace {

const gg::Graph& benchmark_graph() {
    static const gg::Graph g = gg::generate_power_law(20000, 16.0, 2.1, 7);
    return g;
}

gg::EngineConfig scheme_config(gg::Scheme scheme, double sigma) {
    gg::EngineConfig cfg;
    cfg.scheme = scheme;
    cfg.sigma = sigma;
    cfg.theta = 0.3;
    cfg.alpha = 5;
    cfg.max_iterations = 20;
    cfg.seed = 1;
    return cfg;
}

void BM_PageRankAccurate(benchmark::State& state) {
    const gg::Graph& g = benchmark_graph();
    gg::EngineConfig cfg = scheme_config(gg::Scheme::accurate, 1.0);
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto report = gg::run(g, gg::pagerank_spec(0.85, 1e-12), cfg);
        benchmark::DoNotOptimize(report.final_properties.data());
    }
    state.counters["edges/s"] = benchmark::Counter(
        static_cast<double>(g.num_edges() * cfg.max_iterations),
        benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_PageRankAccurate)->Arg(1)->Arg(2)->Arg(4);

void BM_PageRankAdaptive(benchmark::State& state) {
    const gg::Graph& g = benchmark_graph();
    const double sigma = static_cast<double>(state.range(0)) / 10.0;
    gg::EngineConfig cfg = scheme_config(gg::Scheme::gg, sigma);
    for (auto _ : state) {
        auto report = gg::run(g, gg::pagerank_spec(0.85, 1e-12), cfg);
        benchmark::DoNotOptimize(report.final_properties.data());
    }
}
BENCHMARK(BM_PageRankAdaptive)->Arg(3)->Arg(5)->Arg(9);

void BM_SsspAccurate(benchmark::State& state) {
    const gg::Graph& g = benchmark_graph();
    gg::EngineConfig cfg = scheme_config(gg::Scheme::accurate, 1.0);
    for (auto _ : state) {
        auto report = gg::run(g, gg::sssp_spec(0), cfg);
        benchmark::DoNotOptimize(report.final_properties.data());
    }
}
BENCHMARK(BM_SsspAccurate);

void BM_Sparsify(benchmark::State& state) {
    const gg::Graph& g = benchmark_graph();
    for (auto _ : state) {
        auto flags = gg::sparsify(g, 0.5, 1);
        benchmark::DoNotOptimize(flags.data());
    }
    state.counters["edges/s"] = benchmark::Counter(
        static_cast<double>(g.num_edges()),
        benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Sparsify);

}  // namespace

BENCHMARK_MAIN();
