#include "rewirekit/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rewirekit {

Graph::Graph(int num_nodes, const std::vector<Edge>& edges) : num_nodes_(num_nodes) {
    if (num_nodes < 0) throw std::invalid_argument("Graph: negative node count");
    adj_.resize(static_cast<std::size_t>(num_nodes));
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_nodes || b >= num_nodes)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (a == b) continue;  // self-loops collapse
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    edges_ = std::move(normalized);
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph::Graph(int num_nodes, const std::vector<Edge>& edges, std::vector<int> colour)
    : Graph(num_nodes, edges) {
    if (static_cast<int>(colour.size()) != num_nodes)
        throw std::invalid_argument("Graph: colour map size mismatch");
    for (int c : colour)
        if (c < kUncoloured) throw std::invalid_argument("Graph: invalid colour id");
    colour_ = std::move(colour);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::colours() const {
    if (!colour_) throw std::logic_error("Graph: no colour map present");
    return *colour_;
}

int Graph::colour_of(int u) const { return colours()[static_cast<std::size_t>(u)]; }

Graph Graph::with_colours(std::vector<int> colour) const {
    return Graph(num_nodes_, edges_, std::move(colour));
}

std::vector<int> bfs_order(const Graph& g, int start) {
    if (start < 0 || start >= g.num_nodes())
        throw std::invalid_argument("bfs_order: start index out of range");
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(g.num_nodes()), 0);
    std::queue<int> frontier;
    frontier.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        order.push_back(u);
        for (int v : g.neighbours(u)) {  // ascending: gives the index tie-break
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                frontier.push(v);
            }
        }
    }
    return order;
}

std::vector<int> bfs_distances(const Graph& g, int start) {
    if (start < 0 || start >= g.num_nodes())
        throw std::invalid_argument("bfs_distances: start index out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.num_nodes()), DistanceMatrix::kUnreachable);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(start)] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : g.neighbours(u)) {
            if (dist[static_cast<std::size_t>(v)] == DistanceMatrix::kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.num_nodes();
    std::vector<int> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                          DistanceMatrix::kUnreachable);
    for (int s = 0; s < n; ++s) {
        const std::vector<int> d = bfs_distances(g, s);
        std::copy(d.begin(), d.end(),
                  data.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
    return DistanceMatrix(n, std::move(data));
}

std::vector<Edge> pairs_at_distance(const DistanceMatrix& dist, int d) {
    if (d < 1) throw std::invalid_argument("pairs_at_distance: d must be >= 1");
    std::vector<Edge> pairs;
    const int n = dist.num_nodes();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist.at(i, j) == d) pairs.emplace_back(i, j);
    return pairs;
}

std::vector<Edge> pairs_at_distance(const Graph& g, int d) {
    return pairs_at_distance(all_pairs_distances(g), d);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> components;
    std::vector<char> seen(static_cast<std::size_t>(g.num_nodes()), 0);
    for (int s = 0; s < g.num_nodes(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp = bfs_order(g, s);
        for (int u : comp) seen[static_cast<std::size_t>(u)] = 1;
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const Graph& g) {
    if (g.num_nodes() <= 1) return true;
    return static_cast<int>(bfs_order(g, 0).size()) == g.num_nodes();
}

}  // namespace rewirekit
