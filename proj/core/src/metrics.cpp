#include "gg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gg {

namespace {

ErrorReport make_report(MetricKind metric, double error, std::uint64_t k = 0) {
    ErrorReport r;
    r.metric = metric;
    r.error = error;
    r.accuracy = (1.0 - error) * 100.0;
    r.k = k;
    return r;
}

std::vector<std::uint32_t> topk_indices(std::span<const double> values,
                                        std::uint64_t k) {
    std::vector<std::uint32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0u);
    std::partial_sort(order.begin(), order.begin() + static_cast<long>(k),
                      order.end(), [&](std::uint32_t a, std::uint32_t b) {
                          if (values[a] != values[b]) return values[a] > values[b];
                          return a < b;
                      });
    order.resize(k);
    return order;
}

void check_lengths(std::span<const double> approx, std::span<const double> exact) {
    if (approx.size() != exact.size()) {
        throw std::invalid_argument("metric inputs have different lengths");
    }
}

}  // namespace

const char* metric_name(MetricKind m) {
    switch (m) {
        case MetricKind::topk: return "topk";
        case MetricKind::relative: return "relative";
        case MetricKind::stretch: return "stretch";
    }
    return "?";
}

MetricKind metric_from_name(const std::string& name) {
    if (name == "topk") return MetricKind::topk;
    if (name == "relative") return MetricKind::relative;
    if (name == "stretch") return MetricKind::stretch;
    throw std::invalid_argument("unknown metric: " + name);
}

ErrorReport topk_error(std::span<const double> approx,
                       std::span<const double> exact, std::uint64_t k) {
    check_lengths(approx, exact);
    if (k < 1 || k > approx.size()) {
        throw std::invalid_argument("topk k must be in [1, N]");
    }
    const auto top_approx = topk_indices(approx, k);
    const auto top_exact = topk_indices(exact, k);
    std::vector<bool> in_exact(approx.size(), false);
    for (std::uint32_t v : top_exact) in_exact[v] = true;
    std::uint64_t missing = 0;
    for (std::uint32_t v : top_approx) missing += in_exact[v] ? 0 : 1;
    return make_report(MetricKind::topk,
                       static_cast<double>(missing) / static_cast<double>(k), k);
}

ErrorReport relative_error(std::span<const double> approx,
                           std::span<const double> exact) {
    check_lengths(approx, exact);
    if (approx.empty()) return make_report(MetricKind::relative, 0.0);
    double sum = 0.0;
    for (std::size_t v = 0; v < approx.size(); ++v) {
        const double a = approx[v] + 1.0;
        const double e = exact[v] + 1.0;
        sum += std::min(1.0, std::fabs(e - a) / e);
    }
    return make_report(MetricKind::relative, sum / static_cast<double>(approx.size()));
}

ErrorReport stretch_error(std::span<const double> approx,
                          std::span<const double> exact) {
    check_lengths(approx, exact);
    double sum = 0.0;
    std::uint64_t counted = 0;
    for (std::size_t v = 0; v < approx.size(); ++v) {
        const double e = exact[v];
        const double a = approx[v];
        if (a < e) {
            throw std::runtime_error(
                "stretch_error: approximate distance below exact at vertex " +
                std::to_string(v) + " (engine bug)");
        }
        if (std::isinf(e)) continue;        // unreachable either way
        if (e == 0.0 && a == 0.0) continue; // the source
        ++counted;
        if (std::isinf(a) || e == 0.0) {
            sum += 1.0;
            continue;
        }
        sum += 1.0 - e / a;
    }
    const double error = counted == 0 ? 0.0 : sum / static_cast<double>(counted);
    return make_report(MetricKind::stretch, error);
}

}  // namespace gg
