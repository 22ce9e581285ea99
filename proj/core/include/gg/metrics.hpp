#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace gg {

enum class MetricKind { topk, relative, stretch };

const char* metric_name(MetricKind m);
MetricKind metric_from_name(const std::string& name);

struct ErrorReport {
    MetricKind metric = MetricKind::topk;
    double error = 0.0;     // in [0, 1]
    double accuracy = 100;  // (1 - error) * 100
    std::uint64_t k = 0;    // top-k size; 0 for the other metrics
};

/// Fraction of the approximate top-k (by descending value, ties broken by
/// ascending vertex id) that is missing from the exact top-k.
ErrorReport topk_error(std::span<const double> approx,
                       std::span<const double> exact, std::uint64_t k);

/// Mean of per-vertex |exact - approx| / exact, clamped to [0,1]. Both
/// vectors are offset by +1 first so a zero reference value (component
/// label 0) never divides by zero.
ErrorReport relative_error(std::span<const double> approx,
                           std::span<const double> exact);

/// Mean of per-vertex 1 - exact/approx over vertices reachable in the exact
/// run. Vertices unreachable in both are excluded, as are exact(0)/approx(0)
/// pairs (the source). A vertex reachable exactly but not approximately
/// contributes 1. Requires approx >= exact everywhere (dropping edges cannot
/// shorten a path); a violation reports the vertex and aborts.
ErrorReport stretch_error(std::span<const double> approx,
                          std::span<const double> exact);

}  // namespace gg
