#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "myopia/dynamics.hpp"
#include "myopia/edgelist.hpp"
#include "myopia/protocol.hpp"
#include "myopia/results_io.hpp"
#include "myopia/version.hpp"

namespace py = pybind11;
using namespace myopia;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
    return pairs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Effective-resistance graph sparsification experiments";
    m.attr("__version__") = kVersion;

    // rng
    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<uint64_t>(), py::arg("seed"))
        .def("next_u64", &SplitMix64::next_u64)
        .def("next_double", &SplitMix64::next_double)
        .def("bernoulli", &SplitMix64::bernoulli, py::arg("p"));
    m.def("mix_seed", &mix_seed, py::arg("base_seed"), py::arg("stream_index"));

    // graphs
    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::vertex_count)
        .def_property_readonly("num_edges", &Graph::edge_count)
        .def("edges", &edge_pairs)
        .def("edge_index", &Graph::edge_index, py::arg("u"), py::arg("v"))
        .def("subgraph", &Graph::subgraph, py::arg("edge_indices"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "<myopia.Graph n=" << g.vertex_count() << " m=" << g.edge_count() << ">";
            return out.str();
        });

    py::class_<FrequencyModel>(m, "FrequencyModel")
        .def(py::init<const Graph&, std::vector<double>>(), py::arg("graph"), py::arg("freq"))
        .def("__len__", &FrequencyModel::size)
        .def("__getitem__",
             [](const FrequencyModel& fm, int e) {
                 if (e < 0 || e >= fm.size()) throw py::index_error();
                 return fm[e];
             })
        .def("values", &FrequencyModel::values);

    py::class_<GeneratedInstance>(m, "GeneratedInstance")
        .def_readonly("graph", &GeneratedInstance::graph)
        .def_readonly("freq", &GeneratedInstance::freq)
        .def_readonly("bridge_edges", &GeneratedInstance::bridge_edges);

    m.def("is_connected", &is_connected, py::arg("g"));
    m.def("separated_vertices", &separated_vertices, py::arg("g"));
    m.def("gen_barbell", &gen_barbell, py::arg("clique_size"), py::arg("clique_freq"),
          py::arg("bridge_freq"));
    m.def("gen_chain_sbm", &gen_chain_sbm, py::arg("clique_sizes"), py::arg("clique_freq"),
          py::arg("bridge_freq"));
    m.def("gen_visible_barbell", &gen_visible_barbell, py::arg("clique_size"), py::arg("k"),
          py::arg("clique_freq"));
    m.def("visible_bridge_freq", &visible_bridge_freq, py::arg("k"));

    // spectral
    m.def("laplacian", &laplacian, py::arg("g"));
    m.def(
        "sym_eigendecomposition",
        [](const Eigen::MatrixXd& a) {
            Eigendecomposition eig = sym_eigendecomposition(a);
            return py::make_tuple(eig.values, eig.vectors);
        },
        py::arg("a"), "Returns (eigenvalues ascending, orthonormal eigenvector columns).");
    m.def("pseudoinverse", &pseudoinverse, py::arg("l"));

    py::class_<ResistanceMap>(m, "ResistanceMap")
        .def_readonly("r", &ResistanceMap::r)
        .def_readonly("lambda_", &ResistanceMap::lambda)
        .def_readonly("w", &ResistanceMap::w);
    m.def("effective_resistance", &effective_resistance, py::arg("g"));
    m.def("weight_map", &weight_map, py::arg("g"), py::arg("lambda_"));
    m.def("fiedler_value", &fiedler_value, py::arg("g"));
    m.def("relative_spectral_error", &relative_spectral_error, py::arg("g_true"), py::arg("h"));

    // sparsification
    py::enum_<StrategyTag>(m, "StrategyTag")
        .value("Random", StrategyTag::Random)
        .value("Standard", StrategyTag::Standard)
        .value("Weighted", StrategyTag::Weighted)
        .value("Oracle", StrategyTag::Oracle);

    py::class_<Strategy>(m, "Strategy")
        .def(py::init<StrategyTag, double>(), py::arg("tag"), py::arg("lambda_") = 2.0)
        .def_readwrite("tag", &Strategy::tag)
        .def_readwrite("lambda_", &Strategy::lambda)
        .def_static("random", &Strategy::random)
        .def_static("standard", &Strategy::standard)
        .def_static("weighted", &Strategy::weighted, py::arg("lambda_"))
        .def_static("oracle", &Strategy::oracle);

    py::class_<ScoredEdges>(m, "ScoredEdges")
        .def_readonly("scores", &ScoredEdges::scores)
        .def_readonly("tiebreak", &ScoredEdges::tiebreak);

    m.def("score_edges", &score_edges, py::arg("strategy"), py::arg("inst"), py::arg("rmap"),
          py::arg("rng"));
    m.def("budget", &budget, py::arg("rho"), py::arg("m"));
    m.def("select_top", &select_top, py::arg("scored"), py::arg("b"));
    m.def("sparsify", &sparsify, py::arg("inst"), py::arg("rmap"), py::arg("strategy"),
          py::arg("rho"), py::arg("rng"));

    // protocol
    m.def("default_strategies", &default_strategies, py::arg("lambda_"));

    py::class_<ProtocolConfig>(m, "ProtocolConfig")
        .def(py::init<>())
        .def_readwrite("trials", &ProtocolConfig::trials)
        .def_readwrite("rho", &ProtocolConfig::rho)
        .def_readwrite("lambda_", &ProtocolConfig::lambda)
        .def_readwrite("base_seed", &ProtocolConfig::base_seed)
        .def_readwrite("strategies", &ProtocolConfig::strategies)
        .def_readwrite("jobs", &ProtocolConfig::jobs);

    py::class_<TrialStats>(m, "TrialStats")
        .def_readonly("strategy", &TrialStats::strategy)
        .def_readonly("connectivity_rate", &TrialStats::connectivity_rate)
        .def_readonly("rse_mean", &TrialStats::rse_mean)
        .def_readonly("rse_std", &TrialStats::rse_std)
        .def_readonly("trials", &TrialStats::trials)
        .def("__repr__", [](const TrialStats& s) {
            std::ostringstream out;
            out << "<myopia.TrialStats " << strategy_name(s.strategy)
                << " rate=" << s.connectivity_rate << " rse=" << s.rse_mean << "+/-" << s.rse_std
                << " K=" << s.trials << ">";
            return out.str();
        });

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("connected", &TrialResult::connected)
        .def_readonly("rse", &TrialResult::rse);

    m.def("run_trial", &run_trial, py::arg("inst"), py::arg("rmap"), py::arg("strategy"),
          py::arg("rho"), py::arg("trial_index"), py::arg("base_seed"));
    m.def("run_protocol", &run_protocol, py::arg("inst"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<PhasePoint>(m, "PhasePoint")
        .def_readonly("k", &PhasePoint::k)
        .def_readonly("standard", &PhasePoint::standard)
        .def_readonly("weighted", &PhasePoint::weighted);
    m.def("run_phase_sweep", &run_phase_sweep, py::arg("clique_size"), py::arg("k_values"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());

    // dynamics
    py::class_<DynamicsConfig>(m, "DynamicsConfig")
        .def(py::init<>())
        .def_readwrite("epsilon", &DynamicsConfig::epsilon)
        .def_readwrite("omega", &DynamicsConfig::omega)
        .def_readwrite("eta", &DynamicsConfig::eta)
        .def_readwrite("batch", &DynamicsConfig::batch)
        .def_readwrite("steps", &DynamicsConfig::steps)
        .def_readwrite("theta0", &DynamicsConfig::theta0)
        .def_readwrite("seed", &DynamicsConfig::seed);

    py::class_<DynamicsTrace>(m, "DynamicsTrace")
        .def_readonly("probs", &DynamicsTrace::probs)
        .def_readonly("final_p", &DynamicsTrace::final_p);

    m.def("sgd_step", &sgd_step, py::arg("theta"), py::arg("batch_labels"), py::arg("omega"),
          py::arg("eta"));
    m.def("run_dynamics", &run_dynamics, py::arg("config"));
    m.def("fixed_point", &fixed_point, py::arg("epsilon"), py::arg("omega"));
    m.def("dynamics_trace_csv", &dynamics_trace_csv, py::arg("standard"), py::arg("weighted"));

    // files
    m.def("read_edge_list", &read_edge_list, py::arg("path"));
    m.def(
        "write_edge_list",
        [](const std::filesystem::path& path, const Graph& g) { write_edge_list(path, g); },
        py::arg("path"), py::arg("g"));
    m.def("read_frequencies", &read_frequencies, py::arg("path"), py::arg("g"));
    m.def(
        "write_frequencies",
        [](const std::filesystem::path& path, const FrequencyModel& fm) {
            write_frequencies(path, fm);
        },
        py::arg("path"), py::arg("freq"));
}
