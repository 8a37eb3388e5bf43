// Seeded random test graphs.
#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "myopia/graph.hpp"
#include "myopia/rng.hpp"

namespace myopia::testing {

// Random spanning tree plus up to extra_edges additional random edges.
inline Graph random_connected_graph(int n, int extra_edges, SplitMix64& rng) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(v));
        pairs.emplace_back(u, v);
        seen.insert({u, v});
    }
    int added = 0;
    int attempts = 0;
    while (added < extra_edges && attempts < 20 * (extra_edges + 1)) {
        ++attempts;
        if (n < 2) break;
        int u = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(n));
        int v = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        pairs.emplace_back(u, v);
        ++added;
    }
    return Graph(n, std::move(pairs));
}

// G(n, p); may be disconnected.
inline Graph random_graph(int n, double p, SplitMix64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_double() < p) pairs.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(pairs));
}

inline int component_count(const Graph& g) {
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    int components = g.vertex_count();
    for (const Edge& e : g.edges()) {
        const int a = find(e.u);
        const int b = find(e.v);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

}  // namespace myopia::testing
