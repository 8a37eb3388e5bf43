// Result table serialization.
//
// CSV header:
//   experiment,strategy,k,rho,lambda,trials,connectivity_rate,rse_mean,rse_std,seed
// one row per (strategy, k); k is 0 for experiments without a sweep.
// The JSON mirror is an array of objects with identical field names.
// Numeric fields use 6 significant digits; rates are decimals in [0, 1].
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "myopia/protocol.hpp"

namespace myopia {

struct ResultRow {
    std::string experiment;
    std::string strategy;
    int k = 0;
    double rho = 0.0;
    double lambda = 0.0;
    int trials = 0;
    double connectivity_rate = 0.0;
    double rse_mean = 0.0;
    double rse_std = 0.0;
    uint64_t seed = 0;
};

// Format with %.<digits>g (6 significant digits by default everywhere).
std::string format_sig(double value, int digits = 6);

ResultRow make_row(const std::string& experiment, const TrialStats& stats, int k, double rho,
                   double lambda, uint64_t seed);

std::string results_to_csv(const std::vector<ResultRow>& rows);
std::string results_to_json(const std::vector<ResultRow>& rows);

// Strict inverse of results_to_csv (header and all ten fields required);
// throws std::runtime_error with a line number on malformed input.
std::vector<ResultRow> parse_results_csv(const std::string& text);

}  // namespace myopia
