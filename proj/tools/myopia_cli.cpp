// myopia: experiment runner and resistance inspector.
//
// Exit codes: 0 success, 1 runtime/domain error, 2 usage error.
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "myopia/dynamics.hpp"
#include "myopia/edgelist.hpp"
#include "myopia/protocol.hpp"
#include "myopia/results_io.hpp"
#include "myopia/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Default experiment parameters.
constexpr int kBarbellCliqueSize = 8;
constexpr double kCliqueFreq = 0.95;
constexpr double kBridgeFreq = 0.05;
const std::vector<int> kChainSizes = {10, 15, 20};
constexpr double kBarbellRho = 0.5;
constexpr double kChainRho = 0.6;
constexpr double kPhaseRho = 0.6;

struct ExperimentOptions {
    std::string name;
    uint64_t seed = 42;
    int trials = 500;
    double rho = -1.0;  // <0: per-experiment default
    double lambda = 2.0;
    int k_max = 8;
    std::string out_dir = ".";
    std::string format = "csv";
    int jobs = 1;
};

double resolved_rho(const ExperimentOptions& opt) {
    if (opt.rho > 0.0) return opt.rho;
    if (opt.name == "barbell") return kBarbellRho;
    if (opt.name == "chain") return kChainRho;
    return kPhaseRho;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

// The manifest pins everything needed to reproduce the result bytes.
// --jobs and --out are deliberately absent: results are independent of
// parallelism, and the output directory may be timestamped.
void write_manifest(const fs::path& dir, const ExperimentOptions& opt, const json& parameters,
                    const std::vector<std::string>& outputs, const std::string& command_line) {
    json manifest = {{"command", "experiment"},
                     {"experiment", opt.name},
                     {"version", myopia::kVersion},
                     {"seed", opt.seed},
                     {"format", opt.format},
                     {"parameters", parameters},
                     {"outputs", outputs},
                     {"command_line", command_line}};
    write_text_file(dir / (opt.name + "_manifest.json"), manifest.dump(2) + "\n");
}

std::string protocol_command_line(const ExperimentOptions& opt, double rho) {
    std::string cmd = "myopia experiment " + opt.name + " --seed " + std::to_string(opt.seed) +
                      " --trials " + std::to_string(opt.trials) + " --rho " +
                      myopia::format_sig(rho) + " --lambda " + myopia::format_sig(opt.lambda);
    if (opt.name == "phase") cmd += " --k-max " + std::to_string(opt.k_max);
    cmd += " --format " + opt.format;
    return cmd;
}

void write_results(const fs::path& dir, const ExperimentOptions& opt,
                   const std::vector<myopia::ResultRow>& rows, const json& parameters,
                   double rho) {
    const std::string ext = opt.format == "json" ? ".json" : ".csv";
    const std::string results_name = opt.name + "_results" + ext;
    const std::string text =
        opt.format == "json" ? myopia::results_to_json(rows) : myopia::results_to_csv(rows);
    write_text_file(dir / results_name, text);
    write_manifest(dir, opt, parameters, {results_name}, protocol_command_line(opt, rho));
    std::cout << opt.name << ": wrote " << (dir / results_name).string() << " (K=" << opt.trials
              << ", seed=" << opt.seed << ")\n";
}

myopia::ProtocolConfig protocol_config(const ExperimentOptions& opt, double rho) {
    myopia::ProtocolConfig config;
    config.trials = opt.trials;
    config.rho = rho;
    config.lambda = opt.lambda;
    config.base_seed = opt.seed;
    config.strategies = myopia::default_strategies(opt.lambda);
    config.jobs = opt.jobs;
    return config;
}

void run_barbell(const ExperimentOptions& opt) {
    const double rho = resolved_rho(opt);
    const myopia::GeneratedInstance inst =
        myopia::gen_barbell(kBarbellCliqueSize, kCliqueFreq, kBridgeFreq);
    const auto stats = myopia::run_protocol(inst, protocol_config(opt, rho));

    std::vector<myopia::ResultRow> rows;
    for (const auto& s : stats) {
        rows.push_back(myopia::make_row("barbell", s, 0, rho, opt.lambda, opt.seed));
    }
    const json parameters = {{"clique_size", kBarbellCliqueSize}, {"clique_freq", kCliqueFreq},
                             {"bridge_freq", kBridgeFreq},        {"rho", rho},
                             {"lambda", opt.lambda},              {"trials", opt.trials}};
    write_results(opt.out_dir, opt, rows, parameters, rho);
}

void run_chain(const ExperimentOptions& opt) {
    const double rho = resolved_rho(opt);
    const myopia::GeneratedInstance inst = myopia::gen_chain_sbm(kChainSizes, kCliqueFreq, kBridgeFreq);
    const auto stats = myopia::run_protocol(inst, protocol_config(opt, rho));

    std::vector<myopia::ResultRow> rows;
    for (const auto& s : stats) {
        rows.push_back(myopia::make_row("chain", s, 0, rho, opt.lambda, opt.seed));
    }
    const json parameters = {{"clique_sizes", kChainSizes}, {"clique_freq", kCliqueFreq},
                             {"bridge_freq", kBridgeFreq},  {"rho", rho},
                             {"lambda", opt.lambda},        {"trials", opt.trials}};
    write_results(opt.out_dir, opt, rows, parameters, rho);
}

void run_phase(const ExperimentOptions& opt) {
    const double rho = resolved_rho(opt);
    std::vector<int> k_values(static_cast<size_t>(opt.k_max));
    std::iota(k_values.begin(), k_values.end(), 1);
    const auto points = myopia::run_phase_sweep(kBarbellCliqueSize, k_values, protocol_config(opt, rho));

    std::vector<myopia::ResultRow> rows;
    for (const auto& point : points) {
        rows.push_back(myopia::make_row("phase", point.standard, point.k, rho, opt.lambda, opt.seed));
        rows.push_back(myopia::make_row("phase", point.weighted, point.k, rho, opt.lambda, opt.seed));
    }
    const json parameters = {{"clique_size", kBarbellCliqueSize},
                             {"clique_freq", kCliqueFreq},
                             {"k_max", opt.k_max},
                             {"bridge_freq", "min(1, k/4)"},
                             {"rho", rho},
                             {"lambda", opt.lambda},
                             {"trials", opt.trials}};
    write_results(opt.out_dir, opt, rows, parameters, rho);
}

void run_dynamics_experiment(const ExperimentOptions& opt) {
    myopia::DynamicsConfig standard_config;
    standard_config.omega = 1.0;
    standard_config.seed = opt.seed;
    myopia::DynamicsConfig weighted_config;
    weighted_config.seed = opt.seed;  // same label stream for paired curves

    const myopia::DynamicsTrace standard = myopia::run_dynamics(standard_config);
    const myopia::DynamicsTrace weighted = myopia::run_dynamics(weighted_config);

    const std::string trace_name = "dynamics_trace.csv";
    write_text_file(fs::path(opt.out_dir) / trace_name,
                    myopia::dynamics_trace_csv(standard, weighted));

    const json parameters = {{"epsilon", weighted_config.epsilon}, {"omega", weighted_config.omega},
                             {"eta", weighted_config.eta},         {"batch", weighted_config.batch},
                             {"steps", weighted_config.steps},     {"theta0", weighted_config.theta0}};
    json manifest = {{"command", "experiment"},
                     {"experiment", "dynamics"},
                     {"version", myopia::kVersion},
                     {"seed", opt.seed},
                     {"format", "csv"},
                     {"parameters", parameters},
                     {"outputs", {trace_name}},
                     {"command_line", "myopia experiment dynamics --seed " + std::to_string(opt.seed)}};
    write_text_file(fs::path(opt.out_dir) / "dynamics_manifest.json", manifest.dump(2) + "\n");
    std::cout << "dynamics: wrote " << (fs::path(opt.out_dir) / trace_name).string()
              << " (steps=" << weighted_config.steps << ", seed=" << opt.seed << ")\n";
}

void run_experiment(const ExperimentOptions& opt) {
    fs::create_directories(opt.out_dir);
    if (opt.name == "barbell") {
        run_barbell(opt);
    } else if (opt.name == "chain") {
        run_chain(opt);
    } else if (opt.name == "phase") {
        run_phase(opt);
    } else {
        run_dynamics_experiment(opt);
    }
}

std::string timestamp_dir_name() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[64];
    std::strftime(buf, sizeof buf, "myopia-run-%Y%m%d-%H%M%S", &tm);
    return buf;
}

int run_resistance(const std::string& graph_file, double lambda, const std::string& out_file) {
    const myopia::Graph g = myopia::read_edge_list(graph_file);
    if (!myopia::is_connected(g)) {
        const auto pair = myopia::separated_vertices(g);
        throw std::domain_error("graph is disconnected: vertices " + std::to_string(pair->first) +
                                " and " + std::to_string(pair->second) +
                                " lie in different components");
    }
    const myopia::ResistanceMap rmap = myopia::weight_map(g, lambda);
    const double sum_r = std::accumulate(rmap.r.begin(), rmap.r.end(), 0.0);
    const std::string foster = "foster check: sum_r=" + myopia::format_sig(sum_r) +
                               " n_minus_1=" + std::to_string(g.vertex_count() - 1) + "\n";
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error(out_file + ": cannot open for writing");
        myopia::write_resistance_dump(out, g, rmap);
        std::cout << foster;
    } else {
        myopia::write_resistance_dump(std::cout, g, rmap);
        std::cerr << foster;
    }
    return 0;
}

int run_all(uint64_t seed, std::string out_dir, const std::string& format, int jobs) {
    const bool created = [&] {
        if (out_dir.empty()) out_dir = timestamp_dir_name();
        return !fs::exists(out_dir);
    }();
    fs::create_directories(out_dir);

    try {
        for (const char* name : {"barbell", "chain", "phase", "dynamics"}) {
            ExperimentOptions opt;
            opt.name = name;
            opt.seed = seed;
            opt.out_dir = out_dir;
            opt.format = format;
            opt.jobs = jobs;
            run_experiment(opt);
        }
    } catch (...) {
        // Do not leave a half-written bundle behind.
        std::error_code ec;
        if (created) {
            fs::remove_all(out_dir, ec);
        } else {
            for (const char* name : {"barbell", "chain", "phase", "dynamics"}) {
                for (const char* suffix : {"_results.csv", "_results.json", "_manifest.json", "_trace.csv"}) {
                    fs::remove(fs::path(out_dir) / (std::string(name) + suffix), ec);
                }
            }
        }
        throw;
    }
    std::cout << "all: bundle complete in " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective-resistance sparsification experiments"};
    app.set_version_flag("--version", myopia::kVersion);
    app.require_subcommand(1);

    // resistance
    std::string graph_file;
    double res_lambda = 2.0;
    std::string res_out;
    CLI::App* resistance = app.add_subcommand(
        "resistance", "Per-edge effective resistance and weight map of an edge-list graph");
    resistance->add_option("graph_file", graph_file, "edge-list file ('n m' header, then 'u v' lines)")
        ->required();
    resistance->add_option("--lambda", res_lambda, "weight-map multiplier")
        ->check(CLI::Range(0.0, 1e8));
    resistance->add_option("--out", res_out, "write the dump to a file instead of stdout");

    // experiment
    ExperimentOptions opt;
    CLI::App* experiment = app.add_subcommand("experiment", "Run one named experiment");
    experiment->add_option("name", opt.name, "barbell | chain | phase | dynamics")
        ->required()
        ->check(CLI::IsMember({"barbell", "chain", "phase", "dynamics"}));
    experiment->add_option("--seed", opt.seed, "base seed (default 42)");
    experiment->add_option("--trials", opt.trials, "trials per strategy")->check(CLI::Range(1, 1000000));
    experiment->add_option("--rho", opt.rho, "target density (default 0.5 barbell, 0.6 chain/phase)")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
    experiment->add_option("--lambda", opt.lambda, "resistance weight")->check(CLI::Range(0.0, 1e8));
    experiment->add_option("--k-max", opt.k_max, "phase sweep upper k")->check(CLI::Range(1, 64));
    experiment->add_option("--out", opt.out_dir, "output directory (default .)");
    experiment->add_option("--format", opt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    experiment->add_option("--jobs", opt.jobs, "worker threads for trials")->check(CLI::Range(1, 256));

    // all
    uint64_t all_seed = 42;
    std::string all_out;
    std::string all_format = "csv";
    int all_jobs = 1;
    CLI::App* all = app.add_subcommand("all", "Run all four experiments with default parameters");
    all->add_option("--seed", all_seed, "base seed (default 42)");
    all->add_option("--out", all_out, "output directory (default myopia-run-<timestamp>)");
    all->add_option("--format", all_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    all->add_option("--jobs", all_jobs, "worker threads for trials")->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (resistance->parsed()) return run_resistance(graph_file, res_lambda, res_out);
        if (experiment->parsed()) {
            fs::create_directories(opt.out_dir);
            run_experiment(opt);
            return 0;
        }
        return run_all(all_seed, all_out, all_format, all_jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
