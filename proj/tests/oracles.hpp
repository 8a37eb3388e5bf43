// Test-only oracles for effective resistance, independent of the
// eigendecomposition path under test. No Eigen here.
#pragma once

#include <cstdint>
#include <vector>

#include "myopia/graph.hpp"

namespace myopia::testing {

struct SpanningTreeCounts {
    uint64_t total = 0;                // number of spanning trees
    std::vector<uint64_t> per_edge;    // trees containing each edge
};

// Brute force over all C(m, n-1) edge subsets; feasible for n <= 8.
SpanningTreeCounts count_spanning_trees(const Graph& g);

// Matrix-tree identity: R_eff(e) = (#trees containing e) / (#trees).
std::vector<double> resistance_matrix_tree(const Graph& g);

// R_eff(u, v) by grounding v: drop its row/column from the Laplacian,
// solve L' x = 1_u by Gaussian elimination, return x[u].
double resistance_grounded_solve(const Graph& g, int u, int v);

}  // namespace myopia::testing
