#include "myopia/results_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace myopia {

namespace {

constexpr const char* kHeader =
    "experiment,strategy,k,rho,lambda,trials,connectivity_rate,rse_mean,rse_std,seed";

// Parse with the same rounding the writer used, so CSV and JSON mirrors
// carry identical values.
double rounded(double value) { return std::stod(format_sig(value)); }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

std::string format_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

ResultRow make_row(const std::string& experiment, const TrialStats& stats, int k, double rho,
                   double lambda, uint64_t seed) {
    ResultRow row;
    row.experiment = experiment;
    row.strategy = strategy_name(stats.strategy);
    row.k = k;
    row.rho = rho;
    row.lambda = lambda;
    row.trials = stats.trials;
    row.connectivity_rate = stats.connectivity_rate;
    row.rse_mean = stats.rse_mean;
    row.rse_std = stats.rse_std;
    row.seed = seed;
    return row;
}

std::string results_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const ResultRow& row : rows) {
        out << row.experiment << ',' << row.strategy << ',' << row.k << ','
            << format_sig(row.rho) << ',' << format_sig(row.lambda) << ',' << row.trials << ','
            << format_sig(row.connectivity_rate) << ',' << format_sig(row.rse_mean) << ','
            << format_sig(row.rse_std) << ',' << row.seed << '\n';
    }
    return out.str();
}

std::string results_to_json(const std::vector<ResultRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRow& row : rows) {
        arr.push_back({{"experiment", row.experiment},
                       {"strategy", row.strategy},
                       {"k", row.k},
                       {"rho", rounded(row.rho)},
                       {"lambda", rounded(row.lambda)},
                       {"trials", row.trials},
                       {"connectivity_rate", rounded(row.connectivity_rate)},
                       {"rse_mean", rounded(row.rse_mean)},
                       {"rse_std", rounded(row.rse_std)},
                       {"seed", row.seed}});
    }
    return arr.dump(2) + "\n";
}

std::vector<ResultRow> parse_results_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw std::runtime_error("results csv: empty input");
    ++lineno;
    if (line != kHeader) throw std::runtime_error("results csv:1: unexpected header");

    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 10) {
            throw std::runtime_error("results csv:" + std::to_string(lineno) +
                                     ": expected 10 fields, got " + std::to_string(f.size()));
        }
        try {
            ResultRow row;
            row.experiment = f[0];
            row.strategy = f[1];
            row.k = std::stoi(f[2]);
            row.rho = std::stod(f[3]);
            row.lambda = std::stod(f[4]);
            row.trials = std::stoi(f[5]);
            row.connectivity_rate = std::stod(f[6]);
            row.rse_mean = std::stod(f[7]);
            row.rse_std = std::stod(f[8]);
            row.seed = std::stoull(f[9]);
            rows.push_back(std::move(row));
        } catch (const std::exception&) {
            throw std::runtime_error("results csv:" + std::to_string(lineno) + ": malformed row");
        }
    }
    return rows;
}

}  // namespace myopia
