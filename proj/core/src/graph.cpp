#include "gg/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gg {

namespace {

constexpr char kBinaryMagic[6] = {'G', 'G', 'C', 'S', 'R', '1'};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

// splitmix64 finalizer; used wherever we need a platform-stable hash.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

void put_u64(std::ofstream& out, std::uint64_t v) {
    std::array<unsigned char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t get_u64(std::ifstream& in) {
    std::array<unsigned char, 8> b;
    in.read(reinterpret_cast<char*>(b.data()), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ofstream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    std::array<unsigned char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
    out.write(reinterpret_cast<const char*>(b.data()), 8);
}

double get_f64(std::ifstream& in) {
    std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

std::uint64_t EdgeFlags::popcount() const {
    return static_cast<std::uint64_t>(
        std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(num_edges());
    for (VertexId v = 0; v < num_vertices(); ++v) {
        for (std::uint64_t e = in_begin(v); e < in_end(v); ++e) {
            edges.push_back({in_sources[e], v, weighted() ? weights[e] : 1.0});
        }
    }
    return edges;
}

void Graph::validate() const {
    const std::size_t n = num_vertices();
    if (in_offsets.size() != n + 1) fail("graph: offset array has wrong length");
    if (in_offsets.front() != 0) fail("graph: first offset is not zero");
    for (std::size_t v = 0; v < n; ++v) {
        if (in_offsets[v] > in_offsets[v + 1]) fail("graph: offsets decrease");
    }
    if (in_offsets.back() != num_edges()) fail("graph: last offset != edge count");
    std::vector<std::uint32_t> deg(n, 0);
    for (VertexId s : in_sources) {
        if (s >= n) fail("graph: edge source out of range");
        ++deg[s];
    }
    if (deg != out_degree) fail("graph: out_degree inconsistent with edges");
    if (!weights.empty()) {
        if (weights.size() != in_sources.size()) fail("graph: weight array length mismatch");
        for (double w : weights) {
            if (!(w >= 0.0) || !std::isfinite(w)) fail("graph: negative or non-finite weight");
        }
    }
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, bool weighted) {
    Graph g;
    g.in_offsets.assign(n + 1, 0);
    g.out_degree.assign(n, 0);
    for (const Edge& e : edges) {
        if (e.src >= n || e.dst >= n) {
            fail("build_graph: vertex id exceeds vertex count");
        }
        ++g.in_offsets[e.dst + 1];
        ++g.out_degree[e.src];
    }
    std::partial_sum(g.in_offsets.begin(), g.in_offsets.end(), g.in_offsets.begin());

    g.in_sources.resize(edges.size());
    if (weighted) g.weights.resize(edges.size());
    std::vector<std::uint64_t> cursor(g.in_offsets.begin(), g.in_offsets.end() - 1);
    for (const Edge& e : edges) {
        const std::uint64_t pos = cursor[e.dst]++;
        g.in_sources[pos] = e.src;
        if (weighted) g.weights[pos] = e.weight;
    }
    return g;
}

Graph load_edge_list(const std::filesystem::path& path, bool weighted) {
    std::ifstream in(path);
    if (!in) fail("cannot open edge list: " + path.string());

    std::vector<Edge> edges;
    std::size_t max_id = 0;
    bool any_vertex = false;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::istringstream ls(line);
        std::int64_t src = -1, dst = -1;
        if (!(ls >> src >> dst) || src < 0 || dst < 0) {
            fail(path.string() + ":" + std::to_string(lineno) +
                 ": expected `src dst [weight]` with non-negative ids");
        }
        if (src > std::numeric_limits<VertexId>::max() ||
            dst > std::numeric_limits<VertexId>::max()) {
            fail(path.string() + ":" + std::to_string(lineno) +
                 ": vertex id exceeds the 32-bit id space");
        }
        double w = 1.0;
        if (weighted) {
            if (!(ls >> w)) {
                fail(path.string() + ":" + std::to_string(lineno) +
                     ": weight column missing in weighted load");
            }
            if (!(w >= 0.0) || !std::isfinite(w)) {
                fail(path.string() + ":" + std::to_string(lineno) +
                     ": weight must be finite and >= 0");
            }
        }
        edges.push_back({static_cast<VertexId>(src), static_cast<VertexId>(dst), w});
        max_id = std::max({max_id, static_cast<std::size_t>(src),
                           static_cast<std::size_t>(dst)});
        any_vertex = true;
    }
    if (in.bad()) fail("I/O error while reading " + path.string());
    const std::size_t n = any_vertex ? max_id + 1 : 0;
    return build_graph(n, edges, weighted);
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail("cannot open for writing: " + path.string());
    for (const Edge& e : g.edge_list()) {
        out << e.src << ' ' << e.dst;
        if (g.weighted()) out << ' ' << e.weight;
        out << '\n';
    }
    if (!out) fail("I/O error while writing " + path.string());
}

Graph generate_dumbbell(std::size_t k, std::uint64_t /*seed*/) {
    if (k < 2) fail("generate_dumbbell: k must be >= 2");
    std::vector<Edge> edges;
    edges.reserve(2 * k * (k - 1) + 2);
    for (std::size_t clique = 0; clique < 2; ++clique) {
        const VertexId base = static_cast<VertexId>(clique * k);
        for (std::size_t u = 0; u < k; ++u) {
            for (std::size_t v = 0; v < k; ++v) {
                if (u == v) continue;
                edges.push_back({base + static_cast<VertexId>(u),
                                 base + static_cast<VertexId>(v), 1.0});
            }
        }
    }
    const VertexId left = static_cast<VertexId>(k - 1);
    const VertexId right = static_cast<VertexId>(k);
    edges.push_back({left, right, 1.0});
    edges.push_back({right, left, 1.0});
    return build_graph(2 * k, edges, /*weighted=*/false);
}

Graph generate_power_law(std::size_t n, double avg_degree, double exponent,
                         std::uint64_t seed) {
    if (n < 1) fail("generate_power_law: n must be >= 1");
    if (!(avg_degree > 0.0)) fail("generate_power_law: avg_degree must be > 0");
    if (!(exponent > 1.0)) fail("generate_power_law: exponent must be > 1");

    // Zipf weight profile over destinations. A target in-degree distribution
    // with density exponent `gamma` corresponds to rank weights (v+1)^(-1/(gamma-1)).
    const double rank_exp = 1.0 / (exponent - 1.0);
    std::vector<double> cdf(n);
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        total += std::pow(static_cast<double>(v + 1), -rank_exp);
        cdf[v] = total;
    }
    for (double& c : cdf) c /= total;

    const std::uint64_t m = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(n) * avg_degree));
    std::vector<Edge> edges;
    edges.reserve(m);
    // Counter-based draws keyed by (seed, edge index): stable across platforms
    // and insensitive to library distribution implementations.
    const std::uint64_t key = mix64(seed);
    for (std::uint64_t e = 0; e < m; ++e) {
        const double u_dst = to_unit(mix64(key ^ (2 * e + 1)));
        const double u_src = to_unit(mix64(key ^ (2 * e + 2)));
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u_dst);
        const VertexId dst = static_cast<VertexId>(
            std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), n - 1));
        const VertexId src = static_cast<VertexId>(
            std::min<std::size_t>(static_cast<std::size_t>(u_src * static_cast<double>(n)),
                                  n - 1));
        edges.push_back({src, dst, 1.0});
    }
    return build_graph(n, edges, /*weighted=*/false);
}

Graph reverse_orientation(const Graph& g) {
    std::vector<Edge> edges = g.edge_list();
    for (Edge& e : edges) std::swap(e.src, e.dst);
    return build_graph(g.num_vertices(), edges, g.weighted());
}

Graph symmetrized(const Graph& g) {
    std::vector<Edge> edges = g.edge_list();
    const std::size_t original = edges.size();
    edges.reserve(2 * original);
    for (std::size_t i = 0; i < original; ++i) {
        edges.push_back({edges[i].dst, edges[i].src, edges[i].weight});
    }
    return build_graph(g.num_vertices(), edges, g.weighted());
}

void write_binary(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open for writing: " + path.string());
    out.write(kBinaryMagic, sizeof(kBinaryMagic));
    put_u64(out, g.num_vertices());
    put_u64(out, g.num_edges());
    put_u64(out, g.weighted() ? 1 : 0);
    for (std::uint64_t o : g.in_offsets) put_u64(out, o);
    for (VertexId s : g.in_sources) put_u64(out, s);
    for (double w : g.weights) put_f64(out, w);
    if (!out) fail("I/O error while writing " + path.string());
}

Graph read_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open binary graph: " + path.string());
    char magic[6];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kBinaryMagic, sizeof(magic)) != 0) {
        fail(path.string() + ": not a GGCSR1 file");
    }
    const std::uint64_t n = get_u64(in);
    const std::uint64_t m = get_u64(in);
    const std::uint64_t weighted = get_u64(in);
    Graph g;
    g.in_offsets.resize(n + 1);
    for (auto& o : g.in_offsets) o = get_u64(in);
    g.in_sources.resize(m);
    for (auto& s : g.in_sources) s = static_cast<VertexId>(get_u64(in));
    if (weighted) {
        g.weights.resize(m);
        for (auto& w : g.weights) w = get_f64(in);
    }
    if (!in) fail(path.string() + ": truncated GGCSR1 file");
    g.out_degree.assign(n, 0);
    for (VertexId s : g.in_sources) {
        if (s >= n) fail(path.string() + ": corrupt GGCSR1 source array");
        ++g.out_degree[s];
    }
    g.validate();
    return g;
}

bool is_binary_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[6];
    in.read(magic, sizeof(magic));
    return in && std::memcmp(magic, kBinaryMagic, sizeof(magic)) == 0;
}

Graph load_graph_auto(const std::filesystem::path& path, bool weighted) {
    if (is_binary_graph_file(path)) return read_binary(path);
    return load_edge_list(path, weighted);
}

}  // namespace gg
