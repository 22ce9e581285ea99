// Command-line front end: run / sweep / generate / convert.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gg/algorithms.hpp"
#include "gg/bench.hpp"
#include "gg/engine.hpp"
#include "gg/graph.hpp"
#include "gg/metrics.hpp"

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<std::string> split_commas(const std::vector<std::string>& chunks) {
    std::vector<std::string> out;
    for (const std::string& chunk : chunks) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(item);
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::vector<std::string>& chunks,
                                      const std::string& flag, double lo,
                                      double hi) {
    std::vector<double> out;
    for (const std::string& s : split_commas(chunks)) {
        double v = 0.0;
        try {
            v = std::stod(s);
        } catch (...) {
            throw std::invalid_argument(flag + ": `" + s + "` is not a number");
        }
        if (v < lo || v > hi) {
            throw std::invalid_argument(flag + ": value " + s +
                                        " outside domain [" + fmt6(lo) + "," +
                                        fmt6(hi) + "]");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::vector<std::string>& chunks,
                                          const std::string& flag,
                                          std::uint64_t lo) {
    std::vector<std::uint64_t> out;
    for (const std::string& s : split_commas(chunks)) {
        std::uint64_t v = 0;
        try {
            v = std::stoull(s);
        } catch (...) {
            throw std::invalid_argument(flag + ": `" + s +
                                        "` is not a non-negative integer");
        }
        if (v < lo) {
            throw std::invalid_argument(flag + ": value must be >= " +
                                        std::to_string(lo));
        }
        out.push_back(v);
    }
    return out;
}

// Graph specs: a file path, or gen:dumbbell:K, or gen:powerlaw:N,DEG,EXP[,SEED].
gg::Graph make_generated(const std::string& spec) {
    if (spec.rfind("dumbbell:", 0) == 0) {
        const std::string arg = spec.substr(9);
        std::size_t k = 0;
        try {
            k = std::stoull(arg);
        } catch (...) {
            throw std::invalid_argument("generator spec: bad dumbbell size `" + arg + "`");
        }
        return gg::generate_dumbbell(k);
    }
    if (spec.rfind("powerlaw:", 0) == 0) {
        const auto parts = split_commas({spec.substr(9)});
        if (parts.size() != 3 && parts.size() != 4) {
            throw std::invalid_argument(
                "generator spec: powerlaw takes N,DEG,EXP[,SEED]");
        }
        const std::size_t n = std::stoull(parts[0]);
        const double deg = std::stod(parts[1]);
        const double exp = std::stod(parts[2]);
        const std::uint64_t seed = parts.size() == 4 ? std::stoull(parts[3]) : 1;
        return gg::generate_power_law(n, deg, exp, seed);
    }
    throw std::invalid_argument("unknown generator spec: " + spec +
                                " (expected dumbbell:K or powerlaw:N,DEG,EXP)");
}

gg::Graph resolve_graph(const std::string& arg, bool weighted) {
    if (arg.rfind("gen:", 0) == 0) return make_generated(arg.substr(4));
    return gg::load_graph_auto(arg, weighted);
}

unsigned default_threads() {
    if (const char* env = std::getenv("GG_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Plan files are `key = value` lines (quotes optional, # comments); they
// expand to the sweep flags of the same name before parsing.
std::vector<std::string> plan_file_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open plan file: " + path);
    const std::set<std::string> flags{"weighted", "sssp-graded", "parallel-cells"};
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected `key = value`");
        }
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        if (key.empty() || value.empty()) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected `key = value`");
        }
        if (flags.count(key)) {
            if (value == "true" || value == "1" || value == "yes") {
                tokens.push_back("--" + key);
            }
            continue;
        }
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

// Replaces `--plan FILE` with the file's expanded flags.
std::vector<std::string> expand_plan(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--plan") continue;
        if (i + 1 >= args.size()) {
            throw std::invalid_argument("--plan: missing file argument");
        }
        const std::vector<std::string> tokens = plan_file_tokens(args[i + 1]);
        args.erase(args.begin() + static_cast<long>(i),
                   args.begin() + static_cast<long>(i) + 2);
        args.insert(args.begin() + static_cast<long>(i), tokens.begin(),
                    tokens.end());
        break;
    }
    return args;
}

void print_rows(const std::vector<gg::SweepRow>& rows, const gg::SweepPlan& plan) {
    for (const gg::SweepRow& r : rows) {
        std::cout << "scheme=" << gg::scheme_name(r.scheme)
                  << " algo=" << gg::algo_name(plan.algo)
                  << " sigma=" << fmt6(r.sigma) << " theta=" << fmt6(r.theta)
                  << " alpha=" << r.alpha << " iters=" << r.iters
                  << " accuracy=" << fmt6(r.accuracy)
                  << " speedup=" << fmt6(r.speedup)
                  << " edge_ratio=" << fmt6(r.edge_ratio) << '\n';
    }
}

struct CommonOpts {
    std::string graph;
    bool weighted = false;
    std::string algo = "pr";
    std::uint64_t iters = 0;
    int repeats = 5;
    unsigned threads = default_threads();
    std::uint64_t topk = 0;
    double topk_frac = 0.0;
    std::string metric;
    gg::VertexId source = 0;
    bool sssp_graded = false;
    double damping = 0.85;
    double eps = -1.0;
    int bp_states = 2;
    double bp_coupling = 0.8;
    std::string out_csv;
    std::string dump_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--graph", o.graph, "Graph file or gen:SPEC")->required();
    cmd->add_flag("--weighted", o.weighted, "Edge list has a weight column");
    cmd->add_option("--algo", o.algo, "Algorithm")
        ->check(CLI::IsMember({"pr", "sssp", "wcc", "bp"}))
        ->capture_default_str();
    cmd->add_option("--iters", o.iters,
                    "Iteration budget (0: per-algorithm default)")
        ->capture_default_str();
    cmd->add_option("--repeats", o.repeats, "Timing repeats per configuration")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    cmd->add_option("--threads", o.threads,
                    "Worker threads (default from GG_THREADS, else 1)")
        ->check(CLI::Range(1u, 4096u));
    cmd->add_option("--topk", o.topk, "Top-k size for the topk metric");
    cmd->add_option("--topk-frac", o.topk_frac,
                    "Top-k size as a fraction of N")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--metric", o.metric, "Override metric binding")
        ->check(CLI::IsMember({"topk", "relative", "stretch"}));
    cmd->add_option("--source", o.source, "Source vertex for sssp");
    cmd->add_flag("--sssp-graded", o.sssp_graded,
                  "Graded (relative-improvement) sssp influence");
    cmd->add_option("--damping", o.damping, "PageRank damping factor")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--eps", o.eps,
                    "Convergence tolerance (negative: per-algorithm default)");
    cmd->add_option("--bp-states", o.bp_states, "Belief propagation state count")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--bp-coupling", o.bp_coupling,
                    "Belief propagation same-state potential")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--out", o.out_csv, "Write results as CSV");
    cmd->add_option("--dump-reports", o.dump_dir,
                    "Directory for per-cell run report JSON dumps");
}

gg::SweepPlan build_plan(const CommonOpts& o) {
    gg::SweepPlan plan;
    plan.algo = gg::algo_from_name(o.algo);
    plan.graph = resolve_graph(o.graph, o.weighted);
    plan.graph_label = o.graph;
    plan.iterations = o.iters;
    plan.repeats = o.repeats;
    plan.threads = o.threads;
    plan.sssp_source = o.source;
    plan.sssp_graded = o.sssp_graded;
    plan.pr_damping = o.damping;
    plan.epsilon = o.eps;
    plan.bp_states = o.bp_states;
    plan.bp_coupling = o.bp_coupling;
    plan.dump_dir = o.dump_dir;
    if (o.topk > 0 && o.topk_frac > 0.0) {
        throw std::invalid_argument("--topk and --topk-frac are exclusive");
    }
    if (o.topk > 0) {
        if (o.topk > plan.graph.num_vertices()) {
            throw std::invalid_argument("--topk: k exceeds vertex count");
        }
        plan.topk = o.topk;
    } else if (o.topk_frac > 0.0) {
        plan.topk = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(
                   o.topk_frac *
                   static_cast<double>(plan.graph.num_vertices())));
    }
    if (!o.metric.empty()) plan.metric_override = gg::metric_from_name(o.metric);
    return plan;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GraphGuess: adaptive approximate graph processing"};
    app.require_subcommand(1);

    // --- run ---
    CommonOpts run_opts;
    std::string run_scheme = "accurate";
    double run_sigma = 1.0, run_theta = 0.0;
    std::uint64_t run_alpha = 1, run_seed = 1;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one configuration");
    add_common(run_cmd, run_opts);
    run_cmd->add_option("--scheme", run_scheme, "Execution scheme")
        ->check(CLI::IsMember({"accurate", "sp", "sms", "gg"}))
        ->capture_default_str();
    run_cmd->add_option("--sigma", run_sigma, "Sparsification parameter")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    run_cmd->add_option("--theta", run_theta, "Influence threshold")
        ->check(CLI::Range(0.0, 1e18))
        ->capture_default_str();
    run_cmd->add_option("--alpha", run_alpha, "Approximate window length")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 60))
        ->capture_default_str();
    run_cmd->add_option("--seed", run_seed, "Sparsification seed")
        ->capture_default_str();

    // --- sweep ---
    CommonOpts sweep_opts;
    std::vector<std::string> sweep_schemes{"sp", "sms", "gg"};
    std::vector<std::string> sweep_sigma{"0.5"}, sweep_theta{"0"},
        sweep_alpha{"1"}, sweep_seeds{"1"};
    bool parallel_cells = false;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Sweep scheme/parameter grids");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--schemes", sweep_schemes,
                          "Schemes to sweep (comma list)");
    sweep_cmd->add_option("--sigma", sweep_sigma, "Sigma grid (comma list)");
    sweep_cmd->add_option("--theta", sweep_theta, "Theta grid (comma list)");
    sweep_cmd->add_option("--alpha", sweep_alpha, "Alpha grid (comma list)");
    sweep_cmd->add_option("--seeds", sweep_seeds, "Seeds (comma list)");
    sweep_cmd->add_flag("--parallel-cells", parallel_cells,
                        "Run cells concurrently; wall times become NaN");
    std::string plan_doc_only;
    sweep_cmd
        ->add_option("--plan", plan_doc_only,
                     "Plan file with key = value lines; expands to these flags")
        ->option_text("FILE");

    // --- generate ---
    std::string gen_spec, gen_out;
    std::uint64_t gen_seed = 1;
    bool gen_cache = false;
    CLI::App* gen_cmd = app.add_subcommand(
        "generate", "Generate a synthetic graph (dumbbell:K | powerlaw:N,DEG,EXP)");
    gen_cmd->add_option("spec", gen_spec, "Generator spec")->required();
    gen_cmd->add_option("--seed", gen_seed, "Generator seed")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Output path")->required();
    gen_cmd->add_flag("--cache", gen_cache, "Write binary cache instead of text");

    // --- convert ---
    std::string conv_in, conv_out;
    bool conv_weighted = false;
    CLI::App* conv_cmd =
        app.add_subcommand("convert", "Convert an edge list to a binary cache");
    conv_cmd->add_option("--in", conv_in, "Edge list path")->required();
    conv_cmd->add_option("--out", conv_out, "Binary cache path")->required();
    conv_cmd->add_flag("--weighted", conv_weighted,
                       "Edge list has a weight column");

    try {
        std::vector<std::string> args = expand_plan(argc, argv);
        std::reverse(args.begin(), args.end());  // parse(vector) wants reverse order
        app.parse(std::move(args));

        if (*run_cmd) {
            gg::SweepPlan plan = build_plan(run_opts);
            plan.schemes = {gg::scheme_from_name(run_scheme)};
            plan.sigma_grid = {run_sigma};
            plan.theta_grid = {run_theta};
            plan.alpha_grid = {run_alpha};
            plan.seeds = {run_seed};
            const auto rows = gg::run_sweep(plan);
            print_rows(rows, plan);
            if (!run_opts.out_csv.empty()) {
                gg::emit_csv_file(rows, plan, run_opts.out_csv);
            }
            return 0;
        }
        if (*sweep_cmd) {
            gg::SweepPlan plan = build_plan(sweep_opts);
            for (const std::string& s : split_commas(sweep_schemes)) {
                plan.schemes.push_back(gg::scheme_from_name(s));
            }
            plan.sigma_grid = parse_double_list(sweep_sigma, "--sigma", 0.0, 1.0);
            plan.theta_grid = parse_double_list(sweep_theta, "--theta", 0.0, 1e18);
            plan.alpha_grid = parse_u64_list(sweep_alpha, "--alpha", 1);
            plan.seeds = parse_u64_list(sweep_seeds, "--seeds", 0);
            plan.parallel_cells = parallel_cells;
            const auto rows = gg::run_sweep(plan);
            std::cout << gg::summary_table(rows, plan);
            if (!sweep_opts.out_csv.empty()) {
                gg::emit_csv_file(rows, plan, sweep_opts.out_csv);
            }
            return 0;
        }
        if (*gen_cmd) {
            std::string spec = gen_spec;
            if (spec.rfind("powerlaw:", 0) == 0 && spec.find(',') != std::string::npos &&
                std::count(spec.begin(), spec.end(), ',') == 2) {
                spec += "," + std::to_string(gen_seed);
            }
            const gg::Graph g = make_generated(spec);
            if (gen_cache) {
                gg::write_binary(g, gen_out);
            } else {
                gg::write_edge_list(g, gen_out);
            }
            std::cout << "wrote " << gen_out << ": " << g.num_vertices()
                      << " vertices, " << g.num_edges() << " edges\n";
            return 0;
        }
        if (*conv_cmd) {
            const gg::Graph g = gg::load_edge_list(conv_in, conv_weighted);
            gg::write_binary(g, conv_out);
            std::cout << "wrote " << conv_out << ": " << g.num_vertices()
                      << " vertices, " << g.num_edges() << " edges\n";
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
