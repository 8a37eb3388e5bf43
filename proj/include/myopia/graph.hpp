// Simple undirected graphs with indexed edges, exact connectivity, and
// the clique-plus-bridge template generators used by the experiments.
#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace myopia {

// Endpoints are normalized so u < v.
struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertex count n >= 1, no self-loops, no duplicate edges. Edges are kept
// sorted in ascending (u, v) order; their position is the stable edge
// index used by every per-edge map (frequencies, resistances, scores)
// and by the edge-list file format.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

    // Index of {u, v} (either endpoint order), or nullopt if absent.
    std::optional<int> edge_index(int u, int v) const;

    // Subgraph on the same vertex set keeping the given edge indices.
    Graph subgraph(const std::vector<int>& edge_indices) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Exactly one connected component? Decided by union-find, not spectrally,
// so the success metric is exact. n = 1 with no edges counts as connected.
bool is_connected(const Graph& g);

// For a disconnected graph, one vertex pair spanning two components.
std::optional<std::pair<int, int>> separated_vertices(const Graph& g);

// Per-edge marginal appearance probability, indexed like the companion
// graph's edges. Values are validated to [0, 1].
class FrequencyModel {
public:
    FrequencyModel(const Graph& g, std::vector<double> freq);

    double operator[](int edge_index) const { return freq_[static_cast<size_t>(edge_index)]; }
    int size() const { return static_cast<int>(freq_.size()); }
    const std::vector<double>& values() const { return freq_; }

private:
    std::vector<double> freq_;
};

// A template graph, its frequency model, and the edge indices whose
// removal disconnects it.
struct GeneratedInstance {
    Graph graph;
    FrequencyModel freq;
    std::vector<int> bridge_edges;  // ascending
};

// Two K_s cliques (vertices [0, s) and [s, 2s)) joined by the single
// bridge (s-1, s): highest index of the left clique to lowest index of
// the right, so instances are bit-reproducible. Clique edges carry
// clique_freq, the bridge carries bridge_freq.
GeneratedInstance gen_barbell(int clique_size, double clique_freq, double bridge_freq);

// Complete blocks of the given sizes laid out consecutively, consecutive
// blocks joined by one bridge between their boundary vertices (highest
// index of the left block, lowest of the right). #bridges = #blocks - 1.
GeneratedInstance gen_chain_sbm(const std::vector<int>& clique_sizes, double clique_freq,
                                double bridge_freq);

// Structurally identical to gen_barbell (a single bridge edge, so the
// bridge's effective resistance stays 1); only the bridge frequency is
// amplified to visible_bridge_freq(k).
GeneratedInstance gen_visible_barbell(int clique_size, int k, double clique_freq);

// f(k) = min(1, k/4): linear ramp crossing the 0.95 clique frequency
// between k = 3 and k = 4.
double visible_bridge_freq(int k);

}  // namespace myopia
