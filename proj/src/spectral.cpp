#include "rewirekit/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

namespace rewirekit {

namespace {

bool same_component(const Graph& g, int u, int v) {
    const std::vector<int> d = bfs_distances(g, u);
    return d[static_cast<std::size_t>(v)] != DistanceMatrix::kUnreachable;
}

void check_node(const Graph& g, int u, const char* what) {
    if (u < 0 || u >= g.num_nodes()) throw std::invalid_argument(std::string(what) + ": node out of range");
}

}  // namespace

LaplacianSummary laplacian_summary(const Graph& g) {
    const int n = g.num_nodes();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        lap(u, u) += 1.0;
        lap(v, v) += 1.0;
        lap(u, v) -= 1.0;
        lap(v, u) -= 1.0;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("laplacian_summary: eigendecomposition failed");

    LaplacianSummary s;
    s.num_nodes = n;
    s.num_edges = g.num_edges();
    s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

    const double lambda_max = n > 0 ? std::max(s.eigenvalues.back(), 0.0) : 0.0;
    const double cutoff = 1e-9 * lambda_max;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        if (s.eigenvalues[static_cast<std::size_t>(i)] > cutoff)
            inv(i) = 1.0 / s.eigenvalues[static_cast<std::size_t>(i)];
    s.pseudoinverse = solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
    return s;
}

double effective_resistance(const LaplacianSummary& s, int u, int v) {
    // Canonical order keeps R(u,v) == R(v,u) bitwise even though the computed
    // pseudoinverse is only symmetric up to rounding.
    const int a = std::min(u, v);
    const int b = std::max(u, v);
    return s.pseudoinverse(a, a) + s.pseudoinverse(b, b) - 2.0 * s.pseudoinverse(a, b);
}

double effective_resistance(const Graph& g, int u, int v) {
    check_node(g, u, "effective_resistance");
    check_node(g, v, "effective_resistance");
    if (!same_component(g, u, v))
        throw std::invalid_argument("effective_resistance: nodes in different components");
    return effective_resistance(laplacian_summary(g), u, v);
}

double commute_time(const Graph& g, int u, int v) {
    if (g.num_edges() < 1) throw std::invalid_argument("commute_time: graph has no edges");
    return 2.0 * g.num_edges() * effective_resistance(g, u, v);
}

double average_commute_time(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("average_commute_time: graph disconnected");
    if (g.num_edges() < 1) throw std::invalid_argument("average_commute_time: graph has no edges");
    const LaplacianSummary s = laplacian_summary(g);
    const int n = g.num_nodes();
    double total = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            total += 2.0 * g.num_edges() * effective_resistance(s, u, v);
    const double pairs = 0.5 * n * (n - 1);
    return total / pairs;
}

double spectral_gap(const Graph& g) {
    if (!is_connected(g)) return 0.0;
    if (g.num_nodes() < 2) throw std::invalid_argument("spectral_gap: need at least 2 nodes");
    const LaplacianSummary s = laplacian_summary(g);
    return std::max(s.eigenvalues[1], 0.0);
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("diameter: graph disconnected");
    int best = 0;
    for (int s = 0; s < g.num_nodes(); ++s) {
        for (int d : bfs_distances(g, s)) best = std::max(best, d);
    }
    return best;
}

}  // namespace rewirekit
