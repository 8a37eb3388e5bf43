// SGD on a single logit predicting a rare edge: the gradient-starvation
// simulator. Labels are Bernoulli(epsilon); the positive class's
// per-sample gradient is scaled by omega; theta moves against the batch
// mean gradient.
//
// The unweighted stationary point is p = epsilon (the marginal); with a
// positive-class weight it shifts to fixed_point(epsilon, omega).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace myopia {

struct DynamicsConfig {
    double epsilon = 0.05;  // target edge frequency
    double omega = 50.0;    // positive-class gradient weight
    double eta = 0.05;      // learning rate
    int batch = 64;
    int steps = 2000;
    double theta0 = 0.0;
    uint64_t seed = 42;
};

struct DynamicsTrace {
    std::vector<double> probs;  // p_t = sigmoid(theta_t), length steps + 1
    double final_p = 0.0;       // mean of the last min(200, steps) entries
};

// One step: per-sample gradient (sigmoid(theta) - y) * (omega if y else 1),
// theta' = theta - eta * mean(gradient).
double sgd_step(double theta, const std::vector<uint8_t>& batch_labels, double omega, double eta);

DynamicsTrace run_dynamics(const DynamicsConfig& config);

// Solves E[(p - y) * w(y)] = 0: omega*eps / ((1 - eps) + omega*eps).
double fixed_point(double epsilon, double omega);

// "step,p_standard,p_weighted" rows for the two traces side by side.
std::string dynamics_trace_csv(const DynamicsTrace& standard, const DynamicsTrace& weighted);

}  // namespace myopia
