// Monte-Carlo harness: K independent trials per (instance, strategy,
// rho), aggregated into connectivity rate and RSE statistics, plus the
// frequency-amplification sweep.
//
// Trial t draws its stream from mix_seed(base_seed, t), so results are
// bit-identical regardless of execution order or thread count. All
// strategies share the per-trial stream (common random numbers).
#pragma once

#include <cstdint>
#include <vector>

#include "myopia/graph.hpp"
#include "myopia/sparsify.hpp"
#include "myopia/spectral.hpp"

namespace myopia {

std::vector<Strategy> default_strategies(double lambda);

struct ProtocolConfig {
    int trials = 500;
    double rho = 0.5;
    double lambda = 2.0;
    uint64_t base_seed = 42;
    std::vector<Strategy> strategies = default_strategies(2.0);
    int jobs = 1;
};

struct TrialStats {
    StrategyTag strategy = StrategyTag::Standard;
    double connectivity_rate = 0.0;
    double rse_mean = 0.0;
    double rse_std = 0.0;  // sample (K-1) standard deviation
    int trials = 0;
};

struct TrialResult {
    bool connected = false;
    double rse = 0.0;
};

TrialResult run_trial(const GeneratedInstance& inst, const ResistanceMap& rmap,
                      const Strategy& strategy, double rho, int trial_index, uint64_t base_seed);

// One TrialStats per configured strategy. The weight map is computed
// once up front from config.lambda.
std::vector<TrialStats> run_protocol(const GeneratedInstance& inst, const ProtocolConfig& config);

struct PhasePoint {
    int k = 0;
    TrialStats standard;
    TrialStats weighted;
};

// For each k: build the amplified-bridge barbell (clique frequency 0.95)
// and run Standard and Weighted at config.rho. Every k reuses
// config.base_seed, so points with identical frequency models (f(k)
// saturates at 1 for k >= 4) are bit-identical and the Standard curve is
// monotone by construction.
std::vector<PhasePoint> run_phase_sweep(int clique_size, const std::vector<int>& k_values,
                                        const ProtocolConfig& config);

}  // namespace myopia
