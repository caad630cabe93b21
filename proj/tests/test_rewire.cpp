#include <doctest.h>

#include <numeric>
#include <set>

#include "rewirekit/cayley.hpp"
#include "rewirekit/rewire.hpp"
#include "rewirekit/rng.hpp"
#include "rewirekit/synthdata.hpp"

using namespace rewirekit;

namespace {

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

bool is_permutation(const std::vector<int>& mapping) {
    std::vector<char> hit(mapping.size(), 0);
    for (int v : mapping) {
        if (v < 0 || v >= static_cast<int>(mapping.size())) return false;
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

int common_edges(const Graph& g1, const Graph& g2, const Alignment& align) {
    int count = 0;
    for (const auto& [u, v] : g1.edges()) {
        const int a = align.mapping[static_cast<std::size_t>(u)];
        const int b = align.mapping[static_cast<std::size_t>(v)];
        if (g2.has_edge(std::min(a, b), std::max(a, b))) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("interleave schedule") {
    const auto plain = interleave_schedule(5, false);
    CHECK(plain == std::vector<LayerTag>(5, LayerTag::kBase));

    const auto mixed = interleave_schedule(5, true);
    CHECK(mixed == std::vector<LayerTag>{LayerTag::kBase, LayerTag::kRewired, LayerTag::kBase,
                                         LayerTag::kRewired, LayerTag::kBase});
    CHECK_THROWS(interleave_schedule(0, true));
}

TEST_CASE("rewirer_base_only") {
    const Graph g = cycle(3);
    const RewirePlan plan = rewirer_base_only(g, 5);
    CHECK(plan.schedule == std::vector<LayerTag>(5, LayerTag::kBase));
    CHECK(plan.rewired == g);

    const RewirePlan empty = rewirer_base_only(Graph(0, {}), 2);
    CHECK(empty.base.num_nodes() == 0);

    CHECK(rewirer_base_only(cycle(3), 1).schedule == std::vector<LayerTag>{LayerTag::kBase});
}

TEST_CASE("rewirer_cayley") {
    const Graph g = cycle(6);
    const RewirePlan plan = rewirer_cayley(g, 5, 42);
    CHECK(plan.rewired.num_nodes() == 6);
    CHECK(is_connected(plan.rewired));
    CHECK(plan.schedule[1] == LayerTag::kRewired);

    const RewirePlan single = rewirer_cayley(Graph(1, {}), 5, 0);
    CHECK(single.rewired.num_nodes() == 1);

    const RewirePlan again = rewirer_cayley(g, 5, 42);
    CHECK(again.rewired == plan.rewired);
}

TEST_CASE("greedy_align on matching graphs") {
    const Graph triangle = cycle(3);
    const Alignment a = greedy_align(triangle, triangle);
    CHECK(is_permutation(a.mapping));
    CHECK(common_edges(triangle, triangle, a) == 3);

    const Alignment b = greedy_align(path(3), Graph(3, {}));
    CHECK(is_permutation(b.mapping));
    CHECK(common_edges(path(3), Graph(3, {}), b) == 0);

    const Graph six = cycle(6);
    const Alignment c = greedy_align(six, six);
    CHECK(is_permutation(c.mapping));
    CHECK(common_edges(six, six, c) >= 5);

    CHECK_THROWS(greedy_align(path(3), path(4)));
}

TEST_CASE("greedy_align always returns a total bijection") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 14));
        std::vector<Edge> e1, e2;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (rng.uniform01() < 0.3) e1.emplace_back(i, j);
                if (rng.uniform01() < 0.3) e2.emplace_back(i, j);
            }
        const Alignment a = greedy_align(Graph(n, e1), Graph(n, e2));
        CHECK(is_permutation(a.mapping));
    }
    // degenerate shapes
    CHECK(is_permutation(greedy_align(Graph(0, {}), Graph(0, {})).mapping));
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_permutation(greedy_align(k4, k4).mapping));
    CHECK(common_edges(k4, k4, greedy_align(k4, k4)) == 6);
}

TEST_CASE("rewirer_aligned_cayley") {
    // no distance-d pairs: result is a relabelled trimmed Cayley
    const Graph triangle = cycle(3);
    const RewirePlan none = rewirer_aligned_cayley(triangle, 5, 5);
    CHECK(none.rewired.num_edges() == trimmed_cayley(3).graph.num_edges());

    const Graph p6 = path(6);
    const RewirePlan plan = rewirer_aligned_cayley(p6, 5, 5);
    const int captured = captured_pairs(plan.rewired, pairs_at_distance(p6, 5));
    CHECK(captured >= 0);
    CHECK(captured <= 1);

    const Graph disconnected(4, {{0, 1}});
    CHECK_THROWS(rewirer_aligned_cayley(disconnected, 2, 5));
}

TEST_CASE("rewirer_distance_d_pairs") {
    const RewirePlan four = rewirer_distance_d_pairs(cycle(4), 2, 5);
    CHECK(four.rewired.edges() == std::vector<Edge>{{0, 2}, {1, 3}});

    CHECK(rewirer_distance_d_pairs(cycle(3), 2, 5).rewired.num_edges() == 0);
    CHECK(rewirer_distance_d_pairs(path(6), 5, 5).rewired.edges() == std::vector<Edge>{{0, 5}});
}

TEST_CASE("rewirer_fully_connected") {
    CHECK(rewirer_fully_connected(cycle(3), 5).rewired.num_edges() == 3);
    CHECK(rewirer_fully_connected(Graph(1, {}), 5).rewired.num_edges() == 0);
    CHECK(rewirer_fully_connected(Graph(10, {}), 5).rewired.num_edges() == 45);
}

TEST_CASE("rewirer_cayley_clusters") {
    std::vector<int> all_same(6, 0);
    const Graph single_cluster = cycle(6).with_colours(all_same);
    const RewirePlan plan = rewirer_cayley_clusters(single_cluster, 5);
    CHECK(plan.rewired.edges() == trimmed_cayley(6).graph.edges());

    std::vector<int> lonely(3, Graph::kUncoloured);
    lonely[1] = 2;
    const Graph singleton = path(3).with_colours(lonely);
    CHECK(rewirer_cayley_clusters(singleton, 5).rewired.num_edges() == 0);

    // clusters of size 3 and 4 plus an uncoloured node
    std::vector<int> colours = {0, 0, 0, 1, 1, 1, 1, Graph::kUncoloured};
    const Graph two(8, {{0, 7}}, colours);
    const RewirePlan clusters = rewirer_cayley_clusters(two, 5);
    int components_with_edges = 0;
    for (const auto& comp : connected_components(clusters.rewired))
        if (comp.size() > 1) ++components_with_edges;
    CHECK(components_with_edges == 2);
    for (const auto& [u, v] : clusters.rewired.edges()) {
        CHECK(colours[static_cast<std::size_t>(u)] == colours[static_cast<std::size_t>(v)]);
        CHECK(colours[static_cast<std::size_t>(u)] != Graph::kUncoloured);
    }

    CHECK_THROWS(rewirer_cayley_clusters(path(3), 5));
}

TEST_CASE("rewirer_fully_connected_clusters") {
    std::vector<int> colours = {0, 0, 0, 1, 1, 1, 1, Graph::kUncoloured, Graph::kUncoloured};
    const Graph g(9, {{0, 8}}, colours);
    CHECK(rewirer_fully_connected_clusters(g, 5).rewired.num_edges() == 3 + 6 + 1);

    std::vector<int> none(4, Graph::kUncoloured);
    const Graph uncoloured = Graph(4, {}).with_colours(none);
    CHECK(rewirer_fully_connected_clusters(uncoloured, 5, true).rewired.num_edges() == 6);
    CHECK(rewirer_fully_connected_clusters(uncoloured, 5, false).rewired.num_edges() == 0);

    CHECK_THROWS(rewirer_fully_connected_clusters(path(2), 5));
}

TEST_CASE("cluster rewirers never cross colours") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(8, 24));
        Graph bare = procedural_topology(n, rng);
        std::vector<int> colours(static_cast<std::size_t>(n));
        for (int& c : colours) c = static_cast<int>(rng.uniform_int(-1, 2));
        const Graph g = bare.with_colours(colours);
        for (const bool include : {false, true}) {
            for (const auto& plan :
                 {rewirer_cayley_clusters(g, 5, include), rewirer_fully_connected_clusters(g, 5, include)}) {
                for (const auto& [u, v] : plan.rewired.edges())
                    CHECK(colours[static_cast<std::size_t>(u)] == colours[static_cast<std::size_t>(v)]);
            }
        }
    }
}

TEST_CASE("captured_pairs") {
    const Graph four = cycle(4);
    const std::vector<Edge> diag = {{0, 2}, {1, 3}};
    const Graph diag_graph(4, diag);
    CHECK(captured_pairs(diag_graph, diag) == 2);
    CHECK(captured_pairs(four, diag) == 0);
}

TEST_CASE("node identity preserved: rewired node count always matches") {
    Rng rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(5, 20));
        const Graph g = procedural_topology(n, rng);
        CHECK(rewirer_cayley(g, 5, trial).rewired.num_nodes() == n);
        CHECK(rewirer_aligned_cayley(g, 3, 5).rewired.num_nodes() == n);
        CHECK(rewirer_distance_d_pairs(g, 3, 5).rewired.num_nodes() == n);
        CHECK(rewirer_fully_connected(g, 5).rewired.num_nodes() == n);
    }
}

TEST_CASE("aligned placement dominates random placement on average") {
    Rng rng(1234);
    const int d = 5;
    double aligned_mean = 0.0;
    double random_mean = 0.0;
    const int graphs = 50;
    const int placements = 100;
    for (int t = 0; t < graphs; ++t) {
        const int n = static_cast<int>(rng.uniform_int(20, 30));
        const Graph g = procedural_topology(n, rng);
        const auto targets = pairs_at_distance(g, d);

        aligned_mean += captured_pairs(rewirer_aligned_cayley(g, d, 5).rewired, targets);

        double acc = 0.0;
        for (int p = 0; p < placements; ++p)
            acc += captured_pairs(rewirer_cayley(g, 5, mix_seed({std::uint64_t(t), std::uint64_t(p)})).rewired,
                                  targets);
        random_mean += acc / placements;
    }
    aligned_mean /= graphs;
    random_mean /= graphs;
    CHECK(aligned_mean > random_mean);
}
