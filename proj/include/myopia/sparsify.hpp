// Edge-scoring strategies and budgeted top-score selection.
//
// Scores are deterministic per strategy; the stochastic part of a trial
// is the per-edge tie-break key drawn fresh from the trial's stream.
// Ranking compares scores at a fixed absolute resolution (1e-9) so that
// algebraically equal scores tie regardless of floating-point noise in
// the upstream resistance computation, and the random key decides.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "myopia/graph.hpp"
#include "myopia/rng.hpp"
#include "myopia/spectral.hpp"

namespace myopia {

enum class StrategyTag { Random, Standard, Weighted, Oracle };

const char* strategy_name(StrategyTag tag);
std::optional<StrategyTag> strategy_from_name(std::string_view name);

struct Strategy {
    StrategyTag tag = StrategyTag::Standard;
    double lambda = 2.0;  // read by Weighted only

    static Strategy random() { return {StrategyTag::Random, 0.0}; }
    static Strategy standard() { return {StrategyTag::Standard, 0.0}; }
    static Strategy weighted(double lambda) { return {StrategyTag::Weighted, lambda}; }
    static Strategy oracle() { return {StrategyTag::Oracle, 0.0}; }
};

struct ScoredEdges {
    std::vector<double> scores;    // raw, un-quantized
    std::vector<double> tiebreak;  // fresh U[0,1) per call
};

// Random:   score ~ U[0,1) i.i.d.
// Standard: score = P_freq(e)
// Weighted: score = P_freq(e) + lambda * R_eff(e)
// Oracle:   score = R_eff(e)
// Draw order from rng: scores first (Random only), then tie-break keys,
// both in edge-index order.
ScoredEdges score_edges(const Strategy& strategy, const GeneratedInstance& inst,
                        const ResistanceMap& rmap, SplitMix64& rng);

// floor(rho * m + 0.5), clamped to [1, m]. rho must be in (0, 1].
int budget(double rho, int m);

// The b edges maximal under lexicographic (score at 1e-9 resolution,
// tiebreak); returned as ascending edge indices.
std::vector<int> select_top(const ScoredEdges& scored, int b);

// score_edges + budget + select_top on inst.graph.
Graph sparsify(const GeneratedInstance& inst, const ResistanceMap& rmap,
               const Strategy& strategy, double rho, SplitMix64& rng);

}  // namespace myopia
