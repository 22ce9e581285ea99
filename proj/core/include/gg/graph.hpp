#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace gg {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;

/// A single directed edge. `weight` is meaningful only when the owning
/// edge set is weighted.
struct Edge {
    VertexId src = 0;
    VertexId dst = 0;
    double weight = 1.0;
};

/// Immutable directed graph in pull-oriented CSR form: for every vertex v,
/// `in_sources[in_offsets[v] .. in_offsets[v+1])` lists the sources of v's
/// incoming edges. The position of an edge in `in_sources` is its canonical
/// edge id, used by EdgeFlags and influence bookkeeping.
///
/// Duplicate edges and self-loops are preserved (multigraph semantics).
/// Safe for concurrent reads once built.
struct Graph {
    std::vector<std::uint64_t> in_offsets;  // length N+1, in_offsets[0] == 0
    std::vector<VertexId> in_sources;       // length E
    std::vector<double> weights;            // empty, or length E
    std::vector<std::uint32_t> out_degree;  // length N

    std::size_t num_vertices() const { return out_degree.size(); }
    EdgeId num_edges() const { return in_sources.size(); }
    bool weighted() const { return !weights.empty(); }

    std::uint64_t in_begin(VertexId v) const { return in_offsets[v]; }
    std::uint64_t in_end(VertexId v) const { return in_offsets[v + 1]; }
    std::uint64_t in_degree(VertexId v) const { return in_end(v) - in_begin(v); }

    /// Flattens the CSR back into (src, dst, weight) triples, ordered by edge id.
    std::vector<Edge> edge_list() const;

    /// Checks the structural invariants; throws std::runtime_error on the
    /// first violation. Used after deserialization.
    void validate() const;
};

/// One activity flag per edge id. Stored one byte per flag so that worker
/// threads rewriting disjoint per-vertex edge ranges never touch a shared
/// memory location.
class EdgeFlags {
  public:
    EdgeFlags() = default;
    explicit EdgeFlags(std::uint64_t size, bool value = false)
        : bits_(size, value ? 1 : 0) {}

    std::uint64_t size() const { return bits_.size(); }
    bool test(std::uint64_t e) const { return bits_[e] != 0; }
    void set(std::uint64_t e, bool value) { bits_[e] = value ? 1 : 0; }
    std::uint64_t popcount() const;

    std::uint8_t* data() { return bits_.data(); }
    const std::uint8_t* data() const { return bits_.data(); }

    bool operator==(const EdgeFlags&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Builds a CSR graph from an edge list. Vertex ids are dense and 0-based;
/// n must be strictly greater than every id that appears. Edges keep their
/// input order within each destination bucket, which fixes edge ids.
Graph build_graph(std::size_t n, std::span<const Edge> edges, bool weighted);

/// Parses a whitespace-separated `src dst [weight]` text file. Lines starting
/// with '#' or '%' are comments. N = 1 + max vertex id (0 for an empty file).
/// Throws std::runtime_error naming the line on malformed input, and when
/// `weighted` is set but a weight column is missing.
Graph load_edge_list(const std::filesystem::path& path, bool weighted);

/// Writes `src dst [weight]` lines in edge-id order.
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// Two complete directed k-cliques (vertices [0,k) and [k,2k)) joined by the
/// bridge pair (k-1 -> k) and (k -> k-1). Output depends only on k; the seed
/// parameter is accepted for interface uniformity with the other generators.
Graph generate_dumbbell(std::size_t k, std::uint64_t seed = 0);

/// Directed graph with round(n * avg_degree) edges. Edge destinations are
/// sampled from a Zipf-like weight profile so the in-degree distribution
/// follows a discrete power law with the given exponent; sources are uniform.
/// Deterministic and platform-stable for a fixed (n, avg_degree, exponent, seed).
Graph generate_power_law(std::size_t n, double avg_degree, double exponent,
                         std::uint64_t seed);

/// Reverses every edge: in-edges of the result are the out-edges of the input.
Graph reverse_orientation(const Graph& g);

/// Union of g and its reversal (edge multiset doubled). Used to run
/// weak-connectivity style algorithms on directed inputs.
Graph symmetrized(const Graph& g);

/// Binary CSR cache. Layout: magic "GGCSR1", then little-endian u64
/// N, E, weighted flag, followed by the offset / source / weight arrays.
/// Bit-exact across runs on the same platform.
void write_binary(const Graph& g, const std::filesystem::path& path);
Graph read_binary(const std::filesystem::path& path);

/// True if the file starts with the binary cache magic.
bool is_binary_graph_file(const std::filesystem::path& path);

/// Loads either format, sniffing the magic bytes.
Graph load_graph_auto(const std::filesystem::path& path, bool weighted);

}  // namespace gg
