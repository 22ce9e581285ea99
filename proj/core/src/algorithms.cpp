#include "gg/algorithms.hpp"

#include <stdexcept>

#include "gg/engine.hpp"

namespace gg {

BeliefPropagationProgram::Property BeliefPropagationProgram::prior(
    VertexId v) const {
    // Hash-seeded components in [1, 2): interior of the simplex, so messages
    // never degenerate.
    Property p(static_cast<std::size_t>(states));
    double sum = 0.0;
    for (int i = 0; i < states; ++i) {
        const std::uint64_t h =
            detail::mix64(static_cast<std::uint64_t>(v) * states + i);
        p[i] = 1.0 + static_cast<double>(h >> 11) * 0x1.0p-53;
        sum += p[i];
    }
    for (double& x : p) x /= sum;
    return p;
}

double BeliefPropagationProgram::gather(Property& acc, const Property& src,
                                        double, std::uint32_t) const {
    const double off = (1.0 - coupling) / static_cast<double>(states - 1);
    double src_sum = 0.0;
    for (double x : src) src_sum += x;

    double l1_before = 0.0, l1_after = 0.0, l1_diff = 0.0, acc_sum = 0.0;
    for (int i = 0; i < states; ++i) {
        const double msg = off * (src_sum - src[i]) + coupling * src[i];
        const double updated = acc[i] * msg;
        l1_before += std::fabs(acc[i]);
        l1_after += std::fabs(updated);
        l1_diff += std::fabs(acc[i] - updated);
        acc[i] = updated;
        acc_sum += updated;
    }
    // Keep the accumulator on the simplex; the influence ratio is invariant
    // to this rescaling.
    if (acc_sum > 0.0) {
        for (double& x : acc) x /= acc_sum;
    }
    if (l1_after <= 0.0) return 0.0;
    return std::min(1.0, l1_diff / l1_after);
}

BeliefPropagationProgram::Property BeliefPropagationProgram::apply(
    VertexId v, const Property& acc, const Property&, std::size_t) const {
    Property out = prior(v);
    double sum = 0.0;
    for (int i = 0; i < states; ++i) {
        out[i] *= acc[i];
        sum += out[i];
    }
    if (sum > 0.0) {
        for (double& x : out) x /= sum;
    }
    return out;
}

bool BeliefPropagationProgram::vstatus(const Property& before,
                                       const Property& after) const {
    double l1 = 0.0;
    for (int i = 0; i < states; ++i) l1 += std::fabs(before[i] - after[i]);
    return l1 > epsilon;
}

PageRankProgram pagerank_spec(double damping, double epsilon) {
    if (!(damping > 0.0 && damping < 1.0)) {
        throw std::invalid_argument("pagerank damping must be in (0,1)");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("pagerank epsilon must be > 0");
    }
    return PageRankProgram{damping, epsilon};
}

SsspProgram sssp_spec(VertexId source, bool graded) {
    return SsspProgram{source, graded};
}

WccProgram wcc_spec() { return WccProgram{}; }

BeliefPropagationProgram bp_spec(int states, double coupling, double epsilon) {
    if (states < 2) {
        throw std::invalid_argument("bp states must be >= 2");
    }
    if (!(coupling > 0.0 && coupling < 1.0)) {
        throw std::invalid_argument("bp coupling must be in (0,1)");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("bp epsilon must be > 0");
    }
    return BeliefPropagationProgram{states, coupling, epsilon};
}

}  // namespace gg
