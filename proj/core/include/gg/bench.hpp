#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gg/engine.hpp"
#include "gg/graph.hpp"
#include "gg/metrics.hpp"

namespace gg {

enum class Algo { pr, sssp, wcc, bp };

const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);

/// Default error metric per algorithm: top-k for pr/bp, relative for wcc,
/// stretch for sssp.
MetricKind default_metric(Algo a);

/// A parameter sweep: every (scheme, sigma, theta, alpha) combination is
/// compared against the accurate reference of the same seed, run with the
/// same iteration budget. The sp scheme ignores theta/alpha and is expanded
/// over the sigma grid only. Accuracies are averaged over seeds; `repeats`
/// re-runs each configuration for wall-time averaging and never changes
/// results.
struct SweepPlan {
    Algo algo = Algo::pr;
    Graph graph;
    std::string graph_label = "graph";
    std::vector<Scheme> schemes;  // accurate is always included implicitly
    std::vector<double> sigma_grid{0.5};
    std::vector<double> theta_grid{0.0};
    std::vector<std::uint64_t> alpha_grid{1};
    std::uint64_t iterations = 0;  // 0: per-algorithm default budget
    int repeats = 5;
    std::vector<std::uint64_t> seeds{1};
    unsigned threads = 1;

    std::uint64_t topk = 0;  // 0: max(1, N/100)
    std::optional<MetricKind> metric_override;
    VertexId sssp_source = 0;
    bool sssp_graded = false;
    double pr_damping = 0.85;
    double epsilon = -1.0;  // <0: per-algorithm default
    int bp_states = 2;
    double bp_coupling = 0.8;

    bool parallel_cells = false;   // wall times become non-comparable (NaN)
    std::string dump_dir;          // when set, per-cell RunReport JSON dumps
};

struct SweepRow {
    Scheme scheme = Scheme::accurate;
    double sigma = 1.0;
    double theta = 0.0;
    std::uint64_t alpha = 0;
    std::uint64_t iters = 0;
    int repeats = 1;
    double accuracy = 100.0;
    double speedup = 1.0;
    double edge_ratio = 1.0;
    double wall_ms_mean = 0.0;
    double wall_ms_ref = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepPlan& plan);

/// CSV with the fixed header
/// scheme,algo,graph,sigma,theta,alpha,iters,repeats,accuracy,speedup,edge_ratio,wall_ms_mean,wall_ms_ref
/// and one row per sweep cell, sorted by (scheme, sigma, theta, alpha).
void emit_csv(std::span<const SweepRow> rows, const SweepPlan& plan,
              std::ostream& out);
void emit_csv_file(std::span<const SweepRow> rows, const SweepPlan& plan,
                   const std::filesystem::path& path);

/// Human-readable table plus the best cell inside the 90-95% accuracy band.
std::string summary_table(std::span<const SweepRow> rows, const SweepPlan& plan);

/// Iteration budget used for the accurate reference when the plan does not
/// pin one: 50 for pr, 30 for bp, N+1 (run to convergence) for sssp/wcc.
std::uint64_t default_iteration_budget(Algo a, std::size_t n);

}  // namespace gg
