#include "gg/engine.hpp"

#include <stdexcept>

namespace gg {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace detail

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::accurate: return "accurate";
        case Scheme::sp: return "sp";
        case Scheme::sms: return "sms";
        case Scheme::gg: return "gg";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "accurate") return Scheme::accurate;
    if (name == "sp") return Scheme::sp;
    if (name == "sms") return Scheme::sms;
    if (name == "gg") return Scheme::gg;
    throw std::invalid_argument("unknown scheme: " + name);
}

const char* iteration_mode_name(IterationMode m) {
    switch (m) {
        case IterationMode::approximate: return "approximate";
        case IterationMode::accurate: return "accurate";
        case IterationMode::superstep: return "superstep";
    }
    return "?";
}

void validate(const EngineConfig& cfg) {
    if (!(cfg.sigma >= 0.0 && cfg.sigma <= 1.0)) {
        throw std::invalid_argument("sigma must be in [0,1]");
    }
    if (!(cfg.theta >= 0.0)) {
        throw std::invalid_argument("theta must be >= 0");
    }
    if (cfg.alpha < 1) {
        throw std::invalid_argument("alpha must be >= 1");
    }
    if (cfg.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (cfg.threads < 1) {
        throw std::invalid_argument("threads must be >= 1");
    }
}

EdgeFlags sparsify(const Graph& g, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) {
        throw std::invalid_argument("sigma must be in [0,1]");
    }
    EdgeFlags flags(g.num_edges());
    const std::uint64_t key = detail::mix64(seed);
    for (std::uint64_t e = 0; e < g.num_edges(); ++e) {
        const double u =
            static_cast<double>(detail::mix64(key ^ e) >> 11) * 0x1.0p-53;
        flags.set(e, u < sigma);
    }
    return flags;
}

std::vector<std::uint64_t> select_superstep_iterations(std::uint64_t alpha,
                                                       std::uint64_t max_iterations,
                                                       Scheme scheme) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    std::vector<std::uint64_t> out;
    if (scheme == Scheme::gg) {
        for (std::uint64_t t = alpha + 1; t <= max_iterations; t += alpha + 1) {
            out.push_back(t);
        }
    } else if (scheme == Scheme::sms) {
        if (alpha + 1 <= max_iterations) out.push_back(alpha + 1);
    }
    return out;
}

IterationMode mode_for(Scheme scheme, std::uint64_t t, std::uint64_t alpha) {
    switch (scheme) {
        case Scheme::accurate:
            return IterationMode::accurate;
        case Scheme::sp:
            return IterationMode::approximate;
        case Scheme::sms:
            if (t <= alpha) return IterationMode::approximate;
            if (t == alpha + 1) return IterationMode::superstep;
            return IterationMode::accurate;
        case Scheme::gg:
            return t % (alpha + 1) == 0 ? IterationMode::superstep
                                        : IterationMode::approximate;
    }
    return IterationMode::accurate;
}

}  // namespace gg
