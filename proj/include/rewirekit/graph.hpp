#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rewirekit {

using Edge = std::pair<int, int>;  // stored with first < second

// Simple undirected graph, immutable after construction. Self-loops and
// duplicate edges are collapsed on construction; out-of-range endpoints throw.
// An optional colour map assigns each node at most one colour id (>= 0);
// kUncoloured marks nodes without a colour.
class Graph {
public:
    static constexpr int kUncoloured = -1;

    Graph() = default;
    Graph(int num_nodes, const std::vector<Edge>& edges);
    Graph(int num_nodes, const std::vector<Edge>& edges, std::vector<int> colour);

    int num_nodes() const { return num_nodes_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Sorted ascending, no duplicates.
    const std::vector<int>& neighbours(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }
    bool has_edge(int u, int v) const;

    // Sorted lexicographically, each with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_colours() const { return colour_.has_value(); }
    const std::vector<int>& colours() const;
    int colour_of(int u) const;
    Graph with_colours(std::vector<int> colour) const;

    bool operator==(const Graph& other) const {
        return num_nodes_ == other.num_nodes_ && edges_ == other.edges_ && colour_ == other.colour_;
    }

private:
    int num_nodes_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::optional<std::vector<int>> colour_;
};

// Dense hop-count matrix with an explicit sentinel for unreachable pairs.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int num_nodes, std::vector<int> data)
        : num_nodes_(num_nodes), data_(std::move(data)) {}

    int num_nodes() const { return num_nodes_; }
    int at(int u, int v) const {
        return data_[static_cast<std::size_t>(u) * static_cast<std::size_t>(num_nodes_) +
                     static_cast<std::size_t>(v)];
    }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    int num_nodes_ = 0;
    std::vector<int> data_;
};

// Breadth-first visit order from `start`; equal-depth ties broken by
// ascending node index. Throws on an invalid start index.
std::vector<int> bfs_order(const Graph& g, int start);

// Hop distances from `start` to every node (kUnreachable when disconnected).
std::vector<int> bfs_distances(const Graph& g, int start);

DistanceMatrix all_pairs_distances(const Graph& g);

// All unordered pairs {i,j} with dist(i,j) == d exactly. d >= 1.
std::vector<Edge> pairs_at_distance(const Graph& g, int d);
std::vector<Edge> pairs_at_distance(const DistanceMatrix& dist, int d);

// Partition into maximal connected sets, ordered by smallest member;
// each component's nodes sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace rewirekit
