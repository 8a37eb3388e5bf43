#include "myopia/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace myopia {

namespace {

// Score resolution for ranking. Anything closer than half a quantum is a
// tie and falls through to the per-trial key.
constexpr double kScoreResolution = 1e-9;

int64_t quantize(double score) {
    const double scaled = score / kScoreResolution;
    // Saturate instead of invoking UB for out-of-range llround inputs.
    if (scaled >= 9.0e18) return INT64_MAX;
    if (scaled <= -9.0e18) return INT64_MIN;
    return std::llround(scaled);
}

}  // namespace

const char* strategy_name(StrategyTag tag) {
    switch (tag) {
        case StrategyTag::Random: return "random";
        case StrategyTag::Standard: return "standard";
        case StrategyTag::Weighted: return "weighted";
        case StrategyTag::Oracle: return "oracle";
    }
    return "unknown";
}

std::optional<StrategyTag> strategy_from_name(std::string_view name) {
    if (name == "random") return StrategyTag::Random;
    if (name == "standard") return StrategyTag::Standard;
    if (name == "weighted") return StrategyTag::Weighted;
    if (name == "oracle") return StrategyTag::Oracle;
    return std::nullopt;
}

ScoredEdges score_edges(const Strategy& strategy, const GeneratedInstance& inst,
                        const ResistanceMap& rmap, SplitMix64& rng) {
    const int m = inst.graph.edge_count();
    if (static_cast<int>(rmap.r.size()) != m) {
        throw std::invalid_argument("score_edges: resistance map does not match the graph");
    }
    if (strategy.tag == StrategyTag::Weighted && !(strategy.lambda >= 0.0)) {
        throw std::invalid_argument("score_edges: lambda must be >= 0");
    }

    ScoredEdges scored;
    scored.scores.resize(static_cast<size_t>(m));
    scored.tiebreak.resize(static_cast<size_t>(m));

    switch (strategy.tag) {
        case StrategyTag::Random:
            for (int e = 0; e < m; ++e) scored.scores[static_cast<size_t>(e)] = rng.next_double();
            break;
        case StrategyTag::Standard:
            for (int e = 0; e < m; ++e) scored.scores[static_cast<size_t>(e)] = inst.freq[e];
            break;
        case StrategyTag::Weighted:
            for (int e = 0; e < m; ++e) {
                scored.scores[static_cast<size_t>(e)] =
                    inst.freq[e] + strategy.lambda * rmap.r[static_cast<size_t>(e)];
            }
            break;
        case StrategyTag::Oracle:
            scored.scores = rmap.r;
            break;
    }
    for (int e = 0; e < m; ++e) scored.tiebreak[static_cast<size_t>(e)] = rng.next_double();
    return scored;
}

int budget(double rho, int m) {
    if (m < 1) throw std::invalid_argument("budget: m must be >= 1");
    if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("budget: rho must be in (0, 1]");
    const int b = static_cast<int>(std::floor(rho * m + 0.5));
    return std::clamp(b, 1, m);
}

std::vector<int> select_top(const ScoredEdges& scored, int b) {
    const int m = static_cast<int>(scored.scores.size());
    if (scored.tiebreak.size() != scored.scores.size()) {
        throw std::invalid_argument("select_top: scores and tiebreak sizes differ");
    }
    if (b < 1 || b > m) throw std::invalid_argument("select_top: b must be in [1, m]");

    std::vector<int64_t> q(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) q[static_cast<size_t>(e)] = quantize(scored.scores[static_cast<size_t>(e)]);

    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int c) {
        const size_t ia = static_cast<size_t>(a);
        const size_t ic = static_cast<size_t>(c);
        if (q[ia] != q[ic]) return q[ia] > q[ic];
        if (scored.tiebreak[ia] != scored.tiebreak[ic]) return scored.tiebreak[ia] > scored.tiebreak[ic];
        return a < c;
    });

    std::vector<int> selected(order.begin(), order.begin() + b);
    std::sort(selected.begin(), selected.end());
    return selected;
}

Graph sparsify(const GeneratedInstance& inst, const ResistanceMap& rmap,
               const Strategy& strategy, double rho, SplitMix64& rng) {
    const ScoredEdges scored = score_edges(strategy, inst, rmap, rng);
    const int b = budget(rho, inst.graph.edge_count());
    return inst.graph.subgraph(select_top(scored, b));
}

}  // namespace myopia
