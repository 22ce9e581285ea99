#pragma once

#include <chrono>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gg/graph.hpp"

namespace gg {

/// Execution schemes.
///   accurate: every iteration gathers all in-edges.
///   sp:       edges sparsified once at load, never revised.
///   sms:      sparsified start, one superstep, accurate thereafter.
///   gg:       sparsified start with periodic influence-driven supersteps.
enum class Scheme { accurate, sp, sms, gg };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

enum class IterationMode { approximate, accurate, superstep };

const char* iteration_mode_name(IterationMode m);

struct EngineConfig {
    Scheme scheme = Scheme::accurate;
    double sigma = 1.0;            // edge keep probability at load
    double theta = 0.0;            // influence threshold for supersteps
    std::uint64_t alpha = 1;       // approximate iterations per window
    std::uint64_t max_iterations = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Throws std::invalid_argument naming the offending field. All fields are
/// validated regardless of scheme.
void validate(const EngineConfig& cfg);

struct IterationRecord {
    IterationMode mode = IterationMode::accurate;
    std::uint64_t processed_edges = 0;
    std::uint64_t active_vertices = 0;
    double wall_seconds = 0.0;
};

template <typename Property>
struct RunReport {
    std::vector<Property> final_properties;
    std::uint64_t iterations_run = 0;
    std::vector<IterationRecord> per_iteration;
    double total_wall_seconds = 0.0;
    std::uint64_t total_processed_edges = 0;
};

/// Raised when an iteration produces a property the program rejects
/// (NaN/overflow); carries the iteration and vertex for diagnostics.
class EngineError : public std::runtime_error {
  public:
    EngineError(std::uint64_t iteration, VertexId vertex)
        : std::runtime_error("invalid property at iteration " +
                             std::to_string(iteration) + ", vertex " +
                             std::to_string(vertex)),
          iteration_(iteration),
          vertex_(vertex) {}
    std::uint64_t iteration() const { return iteration_; }
    VertexId vertex() const { return vertex_; }

  private:
    std::uint64_t iteration_;
    VertexId vertex_;
};

/// The per-algorithm interface. Programs are stateless value objects; gather
/// must be pure in its arguments so parallel execution stays deterministic.
/// gather folds one in-edge into the accumulator and returns the edge's
/// influence (finite, >= 0).
template <typename A>
concept VertexProgram = requires(const A a, typename A::Property p,
                                 typename A::Property& acc, VertexId v,
                                 std::size_t n, double w, std::uint32_t deg,
                                 double influence, double theta) {
    typename A::Property;
    { a.init_property(v, n) } -> std::same_as<typename A::Property>;
    { a.gather_identity() } -> std::same_as<typename A::Property>;
    { a.gather(acc, p, w, deg) } -> std::same_as<double>;
    { a.apply(v, p, p, n) } -> std::same_as<typename A::Property>;
    { a.vstatus(p, p) } -> std::same_as<bool>;
    { a.estatus(influence, theta) } -> std::same_as<bool>;
    { a.valid(p) } -> std::same_as<bool>;
};

/// Marks each edge active independently with probability sigma, using a
/// counter-based hash keyed by (seed, edge id): reproducible and order-free.
EdgeFlags sparsify(const Graph& g, double sigma, std::uint64_t seed);

/// Iterations (1-based) at which the scheme runs a superstep, within
/// [1, max_iterations]. gg: multiples of alpha+1; sms: alpha+1 only.
std::vector<std::uint64_t> select_superstep_iterations(std::uint64_t alpha,
                                                       std::uint64_t max_iterations,
                                                       Scheme scheme);

/// Mode of iteration t (1-based) under the given scheme.
IterationMode mode_for(Scheme scheme, std::uint64_t t, std::uint64_t alpha);

namespace detail {

std::uint64_t mix64(std::uint64_t x);

class IterationTimer {
  public:
    IterationTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Runs the synchronous pull iteration.
///
/// Per iteration: a vertex is processed when its status is active or at
/// least one of its in-edges is flagged active; skipped vertices keep their
/// property and stay inactive. Processed vertices fold gather over all
/// in-edges (accurate/superstep) or flagged in-edges only (approximate),
/// reading sources from the previous iteration's array, then apply their new
/// property and re-evaluate their status. During a superstep every gathered
/// edge's flag is rewritten from its influence; flags of skipped vertices
/// persist. The run stops early after an iteration in which no vertex
/// changed.
///
/// Double-buffered properties plus per-vertex-exclusive writes make results
/// independent of thread count.
template <VertexProgram A>
RunReport<typename A::Property> run(const Graph& g, const A& algo,
                                    const EngineConfig& cfg) {
    using P = typename A::Property;
    validate(cfg);

    const std::size_t n = g.num_vertices();
    RunReport<P> report;
    if (n == 0) return report;

    EdgeFlags flags = cfg.scheme == Scheme::accurate
                          ? EdgeFlags(g.num_edges(), true)
                          : sparsify(g, cfg.sigma, cfg.seed);
    std::vector<std::uint32_t> active_in_degree(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        std::uint32_t c = 0;
        for (std::uint64_t e = g.in_begin(v); e < g.in_end(v); ++e) {
            c += flags.test(e) ? 1 : 0;
        }
        active_in_degree[v] = c;
    }

    std::vector<P> prev(n);
    for (VertexId v = 0; v < n; ++v) prev[v] = algo.init_property(v, n);
    std::vector<P> next = prev;
    std::vector<std::uint8_t> status(n, 1);
    std::vector<std::uint8_t> status_next(n, 0);

    const double* weight_data = g.weighted() ? g.weights.data() : nullptr;
    const std::uint64_t* offsets = g.in_offsets.data();
    const VertexId* sources = g.in_sources.data();
    const std::uint32_t* out_deg = g.out_degree.data();
    std::uint8_t* flag_bytes = flags.data();

    const int nthreads = static_cast<int>(cfg.threads);

    for (std::uint64_t t = 1; t <= cfg.max_iterations; ++t) {
        const IterationMode mode = mode_for(cfg.scheme, t, cfg.alpha);
        const bool approx = mode == IterationMode::approximate;
        const bool superstep = mode == IterationMode::superstep;
        detail::IterationTimer timer;

        next = prev;
        std::fill(status_next.begin(), status_next.end(), std::uint8_t{0});

        std::uint64_t gathered = 0;
        std::uint64_t processed = 0;
        int changed = 0;
        std::int64_t bad_vertex = -1;

#pragma omp parallel for schedule(static) num_threads(nthreads) \
    reduction(+ : gathered, processed) reduction(| : changed)   \
    reduction(max : bad_vertex)
        for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(n); ++vi) {
            const VertexId v = static_cast<VertexId>(vi);
            if (!status[v] && active_in_degree[v] == 0) continue;

            P acc = algo.gather_identity();
            std::uint64_t local_edges = 0;
            std::uint32_t new_active = 0;
            const std::uint64_t begin = offsets[v], end = offsets[v + 1];
            for (std::uint64_t e = begin; e < end; ++e) {
                if (approx && !flag_bytes[e]) continue;
                const VertexId s = sources[e];
                const double w = weight_data ? weight_data[e] : 1.0;
                const double influence = algo.gather(acc, prev[s], w, out_deg[s]);
                if (superstep) {
                    const bool keep = algo.estatus(influence, cfg.theta);
                    flag_bytes[e] = keep ? 1 : 0;
                    new_active += keep ? 1 : 0;
                }
                ++local_edges;
            }
            if (superstep) active_in_degree[v] = new_active;

            const P fresh = algo.apply(v, acc, prev[v], n);
            const bool active = algo.vstatus(prev[v], fresh);
            if (!algo.valid(fresh)) bad_vertex = std::max(bad_vertex, vi);
            next[v] = fresh;
            status_next[v] = active ? 1 : 0;
            changed |= active ? 1 : 0;
            gathered += local_edges;
            ++processed;
        }

        if (bad_vertex >= 0) {
            // Report the smallest offending vertex id deterministically.
            for (VertexId v = 0; v < n; ++v) {
                if ((status[v] || active_in_degree[v] > 0) && !algo.valid(next[v])) {
                    throw EngineError(t, v);
                }
            }
        }

        report.per_iteration.push_back(
            {mode, gathered, processed, timer.seconds()});
        report.iterations_run = t;
        prev.swap(next);
        status.swap(status_next);
        if (!changed) break;
    }

    report.final_properties = std::move(prev);
    for (const IterationRecord& rec : report.per_iteration) {
        report.total_processed_edges += rec.processed_edges;
        report.total_wall_seconds += rec.wall_seconds;
    }
    return report;
}

}  // namespace gg
