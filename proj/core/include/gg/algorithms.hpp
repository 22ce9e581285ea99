#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "gg/graph.hpp"

namespace gg {

/// PageRank with damping d: rank' = (1-d)/N + d * sum(src.rank / src.out_degree).
/// Edge influence is the relative growth of the running accumulator,
/// (acc_new - acc_old) / acc_new, with 0/0 defined as 0.
struct PageRankProgram {
    using Property = double;

    double damping = 0.85;
    double epsilon = 1e-7;

    Property init_property(VertexId, std::size_t n) const {
        return 1.0 / static_cast<double>(n);
    }
    Property gather_identity() const { return 0.0; }
    double gather(Property& acc, const Property& src, double /*weight*/,
                  std::uint32_t src_out_degree) const {
        const double before = acc;
        acc += src / static_cast<double>(src_out_degree);
        return acc > 0.0 ? (acc - before) / acc : 0.0;
    }
    Property apply(VertexId, const Property& acc, const Property&,
                   std::size_t n) const {
        return (1.0 - damping) / static_cast<double>(n) + damping * acc;
    }
    bool vstatus(const Property& before, const Property& after) const {
        return std::fabs(before - after) > epsilon;
    }
    bool estatus(double influence, double theta) const { return influence > theta; }
    bool valid(const Property& p) const { return std::isfinite(p); }
};

/// Single-source shortest paths as iterated edge relaxation over the pull
/// direction. Influence is 1 when the edge strictly improved the running
/// minimum (including the first finite value), else 0. The graded variant
/// reports the relative improvement instead.
struct SsspProgram {
    using Property = double;

    VertexId source = 0;
    bool graded = false;

    static constexpr double kInf = std::numeric_limits<double>::infinity();

    Property init_property(VertexId v, std::size_t n) const {
        if (source >= n) {
            throw std::invalid_argument("sssp source vertex out of range");
        }
        return v == source ? 0.0 : kInf;
    }
    Property gather_identity() const { return kInf; }
    double gather(Property& acc, const Property& src, double weight,
                  std::uint32_t) const {
        const double candidate = src + weight;
        if (candidate < acc) {
            double influence = 1.0;
            if (graded && std::isfinite(acc)) {
                influence = (acc - candidate) / acc;
            }
            acc = candidate;
            return influence;
        }
        return 0.0;
    }
    Property apply(VertexId, const Property& acc, const Property& prev,
                   std::size_t) const {
        return std::min(acc, prev);
    }
    bool vstatus(const Property& before, const Property& after) const {
        return after < before;
    }
    bool estatus(double influence, double theta) const { return influence > theta; }
    bool valid(const Property& p) const { return !std::isnan(p) && p >= 0.0; }
};

/// Connected component labels by min-label propagation; labels only ever
/// decrease. Influence is 1 when the edge's source held a smaller label than
/// the running accumulator. Run on a symmetrized graph for weak connectivity.
struct WccProgram {
    using Property = VertexId;

    static constexpr Property kUnset = std::numeric_limits<VertexId>::max();

    Property init_property(VertexId v, std::size_t) const { return v; }
    Property gather_identity() const { return kUnset; }
    double gather(Property& acc, const Property& src, double,
                  std::uint32_t) const {
        if (src < acc) {
            acc = src;
            return 1.0;
        }
        return 0.0;
    }
    Property apply(VertexId, const Property& acc, const Property& prev,
                   std::size_t) const {
        return std::min(acc, prev);
    }
    bool vstatus(const Property& before, const Property& after) const {
        return after != before;
    }
    bool estatus(double influence, double theta) const { return influence > theta; }
    bool valid(const Property&) const { return true; }
};

/// Loopy sum-product style iteration on a pairwise model with the symmetric
/// potential psi(i,j) = coupling when i == j, else (1-coupling)/(S-1).
/// A vertex's belief is its prior (seeded from the vertex id) times the
/// product of potential-smoothed neighbour beliefs, renormalized per edge to
/// avoid underflow. Influence is the relative L1 change of the accumulator
/// from the edge's contribution, capped at 1.
struct BeliefPropagationProgram {
    using Property = std::vector<double>;

    int states = 2;
    double coupling = 0.8;
    double epsilon = 1e-6;

    Property prior(VertexId v) const;

    Property init_property(VertexId v, std::size_t) const { return prior(v); }
    Property gather_identity() const {
        return Property(static_cast<std::size_t>(states), 1.0);
    }
    double gather(Property& acc, const Property& src, double,
                  std::uint32_t) const;
    Property apply(VertexId v, const Property& acc, const Property&,
                   std::size_t) const;
    bool vstatus(const Property& before, const Property& after) const;
    bool estatus(double influence, double theta) const { return influence > theta; }
    bool valid(const Property& p) const {
        for (double x : p) {
            if (!std::isfinite(x)) return false;
        }
        return true;
    }
};

PageRankProgram pagerank_spec(double damping = 0.85, double epsilon = 1e-7);
SsspProgram sssp_spec(VertexId source, bool graded = false);
WccProgram wcc_spec();
BeliefPropagationProgram bp_spec(int states = 2, double coupling = 0.8,
                                 double epsilon = 1e-6);

}  // namespace gg
