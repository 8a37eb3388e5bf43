#include "myopia/edgelist.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace myopia {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, int line, const std::string& msg) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + msg);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    return out;
}

// One significant line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::string line;
    int lineno = 0;

    if (!next_line(in, line, lineno)) fail(path, 1, "missing header line 'n m'");
    int n = 0;
    int m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra)) fail(path, lineno, "expected header 'n m'");
    }
    if (n < 1) fail(path, lineno, "vertex count must be >= 1");
    if (m < 0) fail(path, lineno, "edge count must be >= 0");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno)) {
            fail(path, lineno + 1, "expected " + std::to_string(m) + " edge lines, got " +
                                       std::to_string(i));
        }
        std::istringstream row(line);
        int u = 0;
        int v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) fail(path, lineno, "expected edge line 'u v'");
        pairs.emplace_back(u, v);
    }

    try {
        return Graph(n, std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out = open_output(path);
    write_edge_list(out, g);
}

FrequencyModel read_frequencies(const std::filesystem::path& path, const Graph& g) {
    std::ifstream in = open_input(path);
    std::string line;
    int lineno = 0;
    std::vector<double> values;
    values.reserve(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!next_line(in, line, lineno)) {
            fail(path, lineno + 1, "expected " + std::to_string(g.edge_count()) +
                                       " frequency lines, got " + std::to_string(i));
        }
        std::istringstream row(line);
        double p = 0.0;
        std::string extra;
        if (!(row >> p) || (row >> extra)) fail(path, lineno, "expected one probability");
        if (!(p >= 0.0 && p <= 1.0)) fail(path, lineno, "probability out of [0, 1]");
        values.push_back(p);
    }
    return FrequencyModel(g, std::move(values));
}

void write_frequencies(std::ostream& out, const FrequencyModel& freq) {
    char buf[64];
    for (double p : freq.values()) {
        std::snprintf(buf, sizeof buf, "%.9f", p);
        out << buf << '\n';
    }
}

void write_frequencies(const std::filesystem::path& path, const FrequencyModel& freq) {
    std::ofstream out = open_output(path);
    write_frequencies(out, freq);
}

}  // namespace myopia
