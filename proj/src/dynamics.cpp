#include "myopia/dynamics.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "myopia/results_io.hpp"
#include "myopia/rng.hpp"

namespace myopia {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void validate(const DynamicsConfig& c) {
    if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
        throw std::invalid_argument("dynamics: epsilon must be in (0, 1)");
    }
    if (!(c.omega >= 1.0)) throw std::invalid_argument("dynamics: omega must be >= 1");
    if (!(c.eta > 0.0)) throw std::invalid_argument("dynamics: eta must be > 0");
    if (c.batch < 1) throw std::invalid_argument("dynamics: batch must be >= 1");
    if (c.steps < 1) throw std::invalid_argument("dynamics: steps must be >= 1");
}

}  // namespace

double sgd_step(double theta, const std::vector<uint8_t>& batch_labels, double omega, double eta) {
    if (batch_labels.empty()) throw std::invalid_argument("sgd_step: empty batch");
    const double p = sigmoid(theta);
    double grad_sum = 0.0;
    for (uint8_t y : batch_labels) {
        grad_sum += y ? (p - 1.0) * omega : p;
    }
    return theta - eta * grad_sum / static_cast<double>(batch_labels.size());
}

DynamicsTrace run_dynamics(const DynamicsConfig& config) {
    validate(config);
    SplitMix64 rng(config.seed);

    DynamicsTrace trace;
    trace.probs.reserve(static_cast<size_t>(config.steps) + 1);
    double theta = config.theta0;
    trace.probs.push_back(sigmoid(theta));

    std::vector<uint8_t> labels(static_cast<size_t>(config.batch));
    for (int step = 0; step < config.steps; ++step) {
        for (auto& y : labels) y = rng.bernoulli(config.epsilon) ? 1 : 0;
        theta = sgd_step(theta, labels, config.omega, config.eta);
        trace.probs.push_back(sigmoid(theta));
    }

    const size_t tail = std::min<size_t>(200, static_cast<size_t>(config.steps));
    trace.final_p = std::accumulate(trace.probs.end() - static_cast<long>(tail), trace.probs.end(), 0.0) /
                    static_cast<double>(tail);
    return trace;
}

double fixed_point(double epsilon, double omega) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("fixed_point: epsilon must be in (0, 1)");
    }
    if (!(omega >= 1.0)) throw std::invalid_argument("fixed_point: omega must be >= 1");
    return omega * epsilon / ((1.0 - epsilon) + omega * epsilon);
}

std::string dynamics_trace_csv(const DynamicsTrace& standard, const DynamicsTrace& weighted) {
    if (standard.probs.size() != weighted.probs.size()) {
        throw std::invalid_argument("dynamics_trace_csv: trace lengths differ");
    }
    std::ostringstream out;
    out << "step,p_standard,p_weighted\n";
    for (size_t t = 0; t < standard.probs.size(); ++t) {
        out << t << ',' << format_sig(standard.probs[t]) << ',' << format_sig(weighted.probs[t])
            << '\n';
    }
    return out.str();
}

}  // namespace myopia
