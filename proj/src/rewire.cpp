#include "rewirekit/rewire.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rewirekit/cayley.hpp"
#include "rewirekit/rng.hpp"

namespace rewirekit {

namespace {

// Carry the base colour map over; node identity is preserved by every rewirer.
Graph with_base_colours(const Graph& base, int num_nodes, const std::vector<Edge>& edges) {
    if (base.has_colours()) return Graph(num_nodes, edges, base.colours());
    return Graph(num_nodes, edges);
}

RewirePlan make_plan(const Graph& base, Graph rewired, int layers) {
    return RewirePlan{base, std::move(rewired), interleave_schedule(layers, true)};
}

// colour-id -> ascending member nodes; uncoloured class appended last when
// requested. Ordering of clusters is colour-ascending.
std::vector<std::vector<int>> colour_clusters(const Graph& g, bool include_uncoloured) {
    if (!g.has_colours())
        throw std::invalid_argument("cluster rewirer: graph has no colour map");
    std::map<int, std::vector<int>> by_colour;
    std::vector<int> uncoloured;
    for (int u = 0; u < g.num_nodes(); ++u) {
        const int c = g.colour_of(u);
        if (c == Graph::kUncoloured)
            uncoloured.push_back(u);
        else
            by_colour[c].push_back(u);
    }
    std::vector<std::vector<int>> clusters;
    for (auto& [c, members] : by_colour) clusters.push_back(std::move(members));
    if (include_uncoloured && !uncoloured.empty()) clusters.push_back(std::move(uncoloured));
    return clusters;
}

}  // namespace

std::vector<LayerTag> interleave_schedule(int layers, bool interleaved) {
    if (layers < 1) throw std::invalid_argument("interleave_schedule: layers must be >= 1");
    std::vector<LayerTag> schedule(static_cast<std::size_t>(layers), LayerTag::kBase);
    if (interleaved) {
        for (int l = 1; l < layers; l += 2) schedule[static_cast<std::size_t>(l)] = LayerTag::kRewired;
    }
    return schedule;
}

RewirePlan rewirer_base_only(const Graph& g, int layers) {
    return RewirePlan{g, g, interleave_schedule(layers, false)};
}

RewirePlan rewirer_cayley(const Graph& g, int layers, std::uint64_t seed) {
    if (g.num_nodes() < 1) throw std::invalid_argument("rewirer_cayley: empty graph");
    const CayleyGraph c = trimmed_cayley(g.num_nodes());
    Rng rng(seed);
    const std::vector<int> perm = rng.permutation(g.num_nodes());
    std::vector<Edge> edges;
    edges.reserve(c.graph.edges().size());
    for (const auto& [u, v] : c.graph.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return make_plan(g, with_base_colours(g, g.num_nodes(), edges), layers);
}

Alignment greedy_align(const Graph& g1, const Graph& g2) {
    if (g1.num_nodes() != g2.num_nodes())
        throw std::invalid_argument("greedy_align: node counts differ");
    const int n = g1.num_nodes();
    std::vector<int> mapping(static_cast<std::size_t>(n), -1);
    std::vector<char> assigned2(static_cast<std::size_t>(n), 0);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g1.degree(a) > g1.degree(b); });

    int scan2 = 0;  // lowest possibly-unassigned g2 node
    for (int n1 : order) {
        if (mapping[static_cast<std::size_t>(n1)] != -1) continue;
        while (assigned2[static_cast<std::size_t>(scan2)]) ++scan2;
        const int n2 = scan2;
        mapping[static_cast<std::size_t>(n1)] = n2;
        assigned2[static_cast<std::size_t>(n2)] = 1;

        const auto& nbrs1 = g1.neighbours(n1);
        const auto& nbrs2 = g2.neighbours(n2);
        std::size_t i1 = 0, i2 = 0;
        while (true) {
            while (i1 < nbrs1.size() && mapping[static_cast<std::size_t>(nbrs1[i1])] != -1) ++i1;
            if (i1 == nbrs1.size()) break;
            while (i2 < nbrs2.size() && assigned2[static_cast<std::size_t>(nbrs2[i2])]) ++i2;
            if (i2 == nbrs2.size()) break;  // no candidate: remaining g1 neighbours stay unassigned
            mapping[static_cast<std::size_t>(nbrs1[i1])] = nbrs2[i2];
            assigned2[static_cast<std::size_t>(nbrs2[i2])] = 1;
            ++i1;
            ++i2;
        }
    }
    return Alignment{std::move(mapping)};
}

RewirePlan rewirer_aligned_cayley(const Graph& g, int d, int layers) {
    if (!is_connected(g)) throw std::invalid_argument("rewirer_aligned_cayley: base graph must be connected");
    const Graph pairs_graph(g.num_nodes(), pairs_at_distance(g, d));
    const CayleyGraph c = trimmed_cayley(g.num_nodes());
    const Alignment align = greedy_align(pairs_graph, c.graph);

    std::vector<int> inverse(static_cast<std::size_t>(g.num_nodes()), -1);
    for (int u = 0; u < g.num_nodes(); ++u)
        inverse[static_cast<std::size_t>(align.mapping[static_cast<std::size_t>(u)])] = u;

    std::vector<Edge> edges;
    edges.reserve(c.graph.edges().size());
    for (const auto& [x, y] : c.graph.edges())
        edges.emplace_back(inverse[static_cast<std::size_t>(x)], inverse[static_cast<std::size_t>(y)]);
    return make_plan(g, with_base_colours(g, g.num_nodes(), edges), layers);
}

RewirePlan rewirer_distance_d_pairs(const Graph& g, int d, int layers) {
    return make_plan(g, with_base_colours(g, g.num_nodes(), pairs_at_distance(g, d)), layers);
}

RewirePlan rewirer_fully_connected(const Graph& g, int layers) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.num_nodes(); ++u)
        for (int v = u + 1; v < g.num_nodes(); ++v) edges.emplace_back(u, v);
    return make_plan(g, with_base_colours(g, g.num_nodes(), edges), layers);
}

RewirePlan rewirer_cayley_clusters(const Graph& g, int layers, bool include_uncoloured) {
    std::vector<Edge> edges;
    for (const auto& members : colour_clusters(g, include_uncoloured)) {
        if (members.size() < 2) continue;  // singleton clusters contribute no edges
        const CayleyGraph c = trimmed_cayley(static_cast<int>(members.size()));
        for (const auto& [u, v] : c.graph.edges())
            edges.emplace_back(members[static_cast<std::size_t>(u)],
                               members[static_cast<std::size_t>(v)]);
    }
    return make_plan(g, with_base_colours(g, g.num_nodes(), edges), layers);
}

RewirePlan rewirer_fully_connected_clusters(const Graph& g, int layers, bool include_uncoloured) {
    std::vector<Edge> edges;
    for (const auto& members : colour_clusters(g, include_uncoloured)) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    }
    return make_plan(g, with_base_colours(g, g.num_nodes(), edges), layers);
}

int captured_pairs(const Graph& rewired, const std::vector<Edge>& target_pairs) {
    int count = 0;
    for (const auto& [a, b] : target_pairs) {
        if (a == b) continue;
        if (rewired.has_edge(std::min(a, b), std::max(a, b))) ++count;
    }
    return count;
}

}  // namespace rewirekit
