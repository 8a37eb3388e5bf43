#include "myopia/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace myopia {

Eigen::MatrixXd laplacian(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        l(e.u, e.u) += 1.0;
        l(e.v, e.v) += 1.0;
        l(e.u, e.v) -= 1.0;
        l(e.v, e.u) -= 1.0;
    }
    return l;
}

Eigendecomposition sym_eigendecomposition(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("sym_eigendecomposition: square matrix required");
    if (a.rows() > 512) throw std::invalid_argument("sym_eigendecomposition: n <= 512 required");
    if (a.rows() > 0) {
        const double scale = a.cwiseAbs().maxCoeff();
        if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
            throw std::invalid_argument("sym_eigendecomposition: matrix is not symmetric");
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("sym_eigendecomposition: eigensolver failed to converge");
    }
    return Eigendecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& l) {
    Eigendecomposition eig = sym_eigendecomposition(l);
    const int n = static_cast<int>(l.rows());
    const double lambda_max = eig.values.size() > 0 ? eig.values.cwiseAbs().maxCoeff() : 0.0;
    const double tau = 1e-9 * n * lambda_max;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(eig.values.size());
    for (int i = 0; i < eig.values.size(); ++i) {
        if (eig.values[i] > tau) inv[i] = 1.0 / eig.values[i];
    }
    return eig.vectors * inv.asDiagonal() * eig.vectors.transpose();
}

ResistanceMap effective_resistance(const Graph& g) {
    if (!is_connected(g)) {
        throw std::domain_error("effective_resistance: graph must be connected");
    }
    const Eigen::MatrixXd lp = pseudoinverse(laplacian(g));
    ResistanceMap rmap;
    rmap.lambda = 0.0;
    rmap.r.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        rmap.r.push_back(lp(e.u, e.u) + lp(e.v, e.v) - 2.0 * lp(e.u, e.v));
    }
    rmap.w.assign(rmap.r.size(), 1.0);
    return rmap;
}

ResistanceMap weight_map(const Graph& g, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("weight_map: lambda must be >= 0");
    ResistanceMap rmap = effective_resistance(g);
    rmap.lambda = lambda;
    for (size_t i = 0; i < rmap.r.size(); ++i) rmap.w[i] = 1.0 + lambda * rmap.r[i];
    return rmap;
}

double fiedler_value(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("fiedler_value: n >= 2 required");
    Eigendecomposition eig = sym_eigendecomposition(laplacian(g));
    return eig.values[1];
}

double relative_spectral_error(const Graph& g_true, const Graph& h) {
    if (h.vertex_count() != g_true.vertex_count()) {
        throw std::invalid_argument("relative_spectral_error: vertex sets differ");
    }
    for (const Edge& e : h.edges()) {
        if (!g_true.edge_index(e.u, e.v)) {
            throw std::invalid_argument("relative_spectral_error: h is not a subgraph of g_true");
        }
    }
    if (!is_connected(g_true)) {
        throw std::domain_error("relative_spectral_error: g_true must be connected");
    }
    const double lambda2_true = fiedler_value(g_true);
    // lambda2 of a disconnected graph is zero by definition; using the
    // exact value keeps disconnected trials at exactly 1.0.
    const double lambda2_h = is_connected(h) ? fiedler_value(h) : 0.0;
    return std::abs(lambda2_true - lambda2_h) / lambda2_true;
}

void write_resistance_dump(std::ostream& out, const Graph& g, const ResistanceMap& rmap) {
    if (static_cast<int>(rmap.r.size()) != g.edge_count()) {
        throw std::invalid_argument("write_resistance_dump: map does not match graph");
    }
    char buf[128];
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        std::snprintf(buf, sizeof buf, "%d %d %d %.9f %.9f\n", i, e.u, e.v,
                      rmap.r[static_cast<size_t>(i)], rmap.w[static_cast<size_t>(i)]);
        out << buf;
    }
}

}  // namespace myopia
