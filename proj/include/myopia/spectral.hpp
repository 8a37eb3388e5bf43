// Dense Laplacian machinery: eigendecomposition, Moore-Penrose
// pseudoinverse, per-edge effective resistance, Fiedler value, and the
// relative spectral error metric.
//
// Effective resistance of edge (u, v) is the quadratic form
//   R(u,v) = (1_u - 1_v)^T L+ (1_u - 1_v) = L+[u,u] + L+[v,v] - 2 L+[u,v]
// and equals 1 exactly when the edge is a bridge.
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "myopia/graph.hpp"

namespace myopia {

// L = D - A: degrees on the diagonal, -1 per edge, rows sum to zero.
Eigen::MatrixXd laplacian(const Graph& g);

struct Eigendecomposition {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // columns, orthonormal
};

// Requires a symmetric matrix (|a_ij - a_ji| <= 1e-12 * max|a|) with
// n <= 512; throws std::invalid_argument otherwise.
Eigendecomposition sym_eigendecomposition(const Eigen::MatrixXd& a);

// Inverts eigenvalues above tau = 1e-9 * n * lambda_max, zeroes the rest.
Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& l);

// Per-edge effective resistance r and weight map w(e) = 1 + lambda * r(e),
// indexed by edge.
struct ResistanceMap {
    std::vector<double> r;
    double lambda = 0.0;
    std::vector<double> w;
};

// Requires a connected graph (resistance across components is infinite);
// throws std::domain_error otherwise. lambda = 0, so w is all ones.
ResistanceMap effective_resistance(const Graph& g);

// effective_resistance with w(e) = 1 + lambda * r(e). lambda >= 0.
ResistanceMap weight_map(const Graph& g, double lambda);

// Second-smallest Laplacian eigenvalue; requires n >= 2. Positive iff
// connected (up to ~1e-8 spectral tolerance; exact connectivity is
// is_connected's job).
double fiedler_value(const Graph& g);

// |lambda2(g_true) - lambda2(h)| / lambda2(g_true), where h must be a
// subgraph of g_true on the same vertex set. Disconnected h scores
// exactly 1.0 (its lambda2 is exactly zero by definition, not by
// eigensolving). Throws std::domain_error if g_true is disconnected.
double relative_spectral_error(const Graph& g_true, const Graph& h);

// Debug dump: one line per edge, "edge_index u v r_eff w".
void write_resistance_dump(std::ostream& out, const Graph& g, const ResistanceMap& rmap);

}  // namespace myopia
