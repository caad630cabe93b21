#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rewirekit/graph.hpp"

namespace rewirekit {

// Combinatorial Laplacian eigendecomposition plus its Moore-Penrose
// pseudoinverse (eigenvalues below 1e-9 * lambda_max treated as zero).
struct LaplacianSummary {
    int num_nodes = 0;
    int num_edges = 0;
    std::vector<double> eigenvalues;  // ascending
    Eigen::MatrixXd pseudoinverse;
};

LaplacianSummary laplacian_summary(const Graph& g);

// R(u,v) from the Laplacian pseudoinverse. u and v must share a component.
double effective_resistance(const Graph& g, int u, int v);
double effective_resistance(const LaplacianSummary& s, int u, int v);

// C(u,v) = 2 |E| R(u,v).
double commute_time(const Graph& g, int u, int v);

// Mean commute time over all unordered pairs; requires a connected graph
// with at least one edge.
double average_commute_time(const Graph& g);

// Algebraic connectivity; 0 for disconnected graphs.
double spectral_gap(const Graph& g);

// Max hop distance over pairs; throws on disconnected input.
int diameter(const Graph& g);

}  // namespace rewirekit
