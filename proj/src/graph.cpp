#include "myopia/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace myopia {

namespace {

// Union-find with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
    }
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    edges_.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("Graph: edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") out of range for n = " +
                                        std::to_string(n));
        }
        if (u > v) std::swap(u, v);
        edges_.push_back(Edge{u, v});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(dup->u) + ", " +
                                    std::to_string(dup->v) + ")");
    }
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                               [](const Edge& a, const Edge& b) {
                                   return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                               });
    if (it == edges_.end() || !(*it == key)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::subgraph(const std::vector<int>& edge_indices) const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edge_indices.size());
    for (int idx : edge_indices) {
        if (idx < 0 || idx >= edge_count()) {
            throw std::invalid_argument("subgraph: edge index " + std::to_string(idx) +
                                        " out of range");
        }
        const Edge& e = edges_[static_cast<size_t>(idx)];
        pairs.emplace_back(e.u, e.v);
    }
    return Graph(n_, std::move(pairs));
}

bool is_connected(const Graph& g) {
    DisjointSet dsu(g.vertex_count());
    int components = g.vertex_count();
    for (const Edge& e : g.edges()) {
        if (dsu.unite(e.u, e.v)) --components;
    }
    return components == 1;
}

std::optional<std::pair<int, int>> separated_vertices(const Graph& g) {
    DisjointSet dsu(g.vertex_count());
    for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
    const int root0 = dsu.find(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (dsu.find(v) != root0) return std::pair(0, v);
    }
    return std::nullopt;
}

FrequencyModel::FrequencyModel(const Graph& g, std::vector<double> freq) : freq_(std::move(freq)) {
    if (static_cast<int>(freq_.size()) != g.edge_count()) {
        throw std::invalid_argument("FrequencyModel: expected one value per edge");
    }
    for (double p : freq_) check_probability(p, "FrequencyModel: frequency");
}

GeneratedInstance gen_barbell(int clique_size, double clique_freq, double bridge_freq) {
    if (clique_size < 2) throw std::invalid_argument("gen_barbell: clique_size must be >= 2");
    check_probability(clique_freq, "gen_barbell: clique_freq");
    check_probability(bridge_freq, "gen_barbell: bridge_freq");

    const int s = clique_size;
    std::vector<std::pair<int, int>> pairs;
    for (int offset : {0, s}) {
        for (int a = offset; a < offset + s; ++a) {
            for (int b = a + 1; b < offset + s; ++b) pairs.emplace_back(a, b);
        }
    }
    pairs.emplace_back(s - 1, s);

    Graph graph(2 * s, std::move(pairs));
    const int bridge = *graph.edge_index(s - 1, s);
    std::vector<double> freq(static_cast<size_t>(graph.edge_count()), clique_freq);
    freq[static_cast<size_t>(bridge)] = bridge_freq;
    FrequencyModel model(graph, std::move(freq));
    return GeneratedInstance{std::move(graph), std::move(model), {bridge}};
}

GeneratedInstance gen_chain_sbm(const std::vector<int>& clique_sizes, double clique_freq,
                                double bridge_freq) {
    if (clique_sizes.size() < 2) {
        throw std::invalid_argument("gen_chain_sbm: need at least two cliques");
    }
    for (int s : clique_sizes) {
        if (s < 2) throw std::invalid_argument("gen_chain_sbm: clique sizes must be >= 2");
    }
    check_probability(clique_freq, "gen_chain_sbm: clique_freq");
    check_probability(bridge_freq, "gen_chain_sbm: bridge_freq");

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> bridge_pairs;
    int offset = 0;
    int prev_end = -1;
    for (int s : clique_sizes) {
        for (int a = offset; a < offset + s; ++a) {
            for (int b = a + 1; b < offset + s; ++b) pairs.emplace_back(a, b);
        }
        if (prev_end >= 0) bridge_pairs.emplace_back(prev_end, offset);
        prev_end = offset + s - 1;
        offset += s;
    }
    pairs.insert(pairs.end(), bridge_pairs.begin(), bridge_pairs.end());

    Graph graph(offset, std::move(pairs));
    std::vector<double> freq(static_cast<size_t>(graph.edge_count()), clique_freq);
    std::vector<int> bridges;
    for (auto [u, v] : bridge_pairs) {
        const int idx = *graph.edge_index(u, v);
        freq[static_cast<size_t>(idx)] = bridge_freq;
        bridges.push_back(idx);
    }
    std::sort(bridges.begin(), bridges.end());
    FrequencyModel model(graph, std::move(freq));
    return GeneratedInstance{std::move(graph), std::move(model), std::move(bridges)};
}

double visible_bridge_freq(int k) { return std::min(1.0, static_cast<double>(k) / 4.0); }

GeneratedInstance gen_visible_barbell(int clique_size, int k, double clique_freq) {
    if (k < 1) throw std::invalid_argument("gen_visible_barbell: k must be >= 1");
    return gen_barbell(clique_size, clique_freq, visible_bridge_freq(k));
}

}  // namespace myopia
