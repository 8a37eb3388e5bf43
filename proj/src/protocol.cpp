#include "myopia/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace myopia {

std::vector<Strategy> default_strategies(double lambda) {
    return {Strategy::random(), Strategy::standard(), Strategy::weighted(lambda),
            Strategy::oracle()};
}

TrialResult run_trial(const GeneratedInstance& inst, const ResistanceMap& rmap,
                      const Strategy& strategy, double rho, int trial_index, uint64_t base_seed) {
    SplitMix64 rng(mix_seed(base_seed, static_cast<uint64_t>(trial_index)));
    const Graph h = sparsify(inst, rmap, strategy, rho, rng);
    TrialResult result;
    result.connected = is_connected(h);
    result.rse = relative_spectral_error(inst.graph, h);
    return result;
}

namespace {

// results[t] is written by exactly one worker; aggregation afterwards
// walks trial order, so the thread count never shows in the output.
void run_trials(const GeneratedInstance& inst, const ResistanceMap& rmap,
                const Strategy& strategy, const ProtocolConfig& config,
                std::vector<TrialResult>& results) {
    const int trials = config.trials;
    const int jobs = std::clamp(config.jobs, 1, trials);
    if (jobs == 1) {
        for (int t = 0; t < trials; ++t) {
            results[static_cast<size_t>(t)] =
                run_trial(inst, rmap, strategy, config.rho, t, config.base_seed);
        }
        return;
    }

    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
                if (failed.load(std::memory_order_relaxed)) return;
                results[static_cast<size_t>(t)] =
                    run_trial(inst, rmap, strategy, config.rho, t, config.base_seed);
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

TrialStats aggregate(StrategyTag tag, const std::vector<TrialResult>& results) {
    const int k = static_cast<int>(results.size());
    int connected = 0;
    double rse_sum = 0.0;
    for (const TrialResult& r : results) {
        connected += r.connected ? 1 : 0;
        rse_sum += r.rse;
    }
    const double mean = rse_sum / k;
    double sq_sum = 0.0;
    for (const TrialResult& r : results) {
        const double d = r.rse - mean;
        sq_sum += d * d;
    }
    TrialStats stats;
    stats.strategy = tag;
    stats.trials = k;
    stats.connectivity_rate = static_cast<double>(connected) / k;
    stats.rse_mean = mean;
    stats.rse_std = k > 1 ? std::sqrt(sq_sum / (k - 1)) : 0.0;
    return stats;
}

}  // namespace

std::vector<TrialStats> run_protocol(const GeneratedInstance& inst, const ProtocolConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("run_protocol: trials must be >= 1");
    if (config.strategies.empty()) {
        throw std::invalid_argument("run_protocol: at least one strategy required");
    }
    const ResistanceMap rmap = weight_map(inst.graph, config.lambda);

    std::vector<TrialStats> all;
    all.reserve(config.strategies.size());
    std::vector<TrialResult> results(static_cast<size_t>(config.trials));
    for (const Strategy& strategy : config.strategies) {
        run_trials(inst, rmap, strategy, config, results);
        all.push_back(aggregate(strategy.tag, results));
    }
    return all;
}

std::vector<PhasePoint> run_phase_sweep(int clique_size, const std::vector<int>& k_values,
                                        const ProtocolConfig& config) {
    if (k_values.empty()) throw std::invalid_argument("run_phase_sweep: k_values must be nonempty");
    constexpr double kCliqueFreq = 0.95;

    ProtocolConfig sweep_config = config;
    sweep_config.strategies = {Strategy::standard(), Strategy::weighted(config.lambda)};

    std::vector<PhasePoint> points;
    points.reserve(k_values.size());
    for (int k : k_values) {
        const GeneratedInstance inst = gen_visible_barbell(clique_size, k, kCliqueFreq);
        std::vector<TrialStats> stats = run_protocol(inst, sweep_config);
        points.push_back(PhasePoint{k, stats[0], stats[1]});
    }
    return points;
}

}  // namespace myopia
