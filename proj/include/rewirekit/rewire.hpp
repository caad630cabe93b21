#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rewirekit/graph.hpp"

namespace rewirekit {

enum class LayerTag { kBase, kRewired };

// Base/rewired graph pair plus the per-layer propagation schedule. Node
// identity is shared: node u means the same entity in both graphs, only
// adjacency differs.
struct RewirePlan {
    Graph base;
    Graph rewired;
    std::vector<LayerTag> schedule;
};

// Bijection node(g1) -> node(g2).
struct Alignment {
    std::vector<int> mapping;
};

// All-BASE when interleaved is false; otherwise BASE, REWIRED, BASE, ...
std::vector<LayerTag> interleave_schedule(int layers, bool interleaved);

RewirePlan rewirer_base_only(const Graph& g, int layers);

// Trimmed Cayley expander of matching size, placed on the base nodes by a
// seeded uniform random permutation.
RewirePlan rewirer_cayley(const Graph& g, int layers, std::uint64_t seed);

// Greedy edge-matching alignment. Outer scan visits g1 nodes in descending
// degree (ties by index); the chosen seed is paired with the lowest
// unassigned g2 node, then unassigned neighbours of the pair are matched in
// ascending index order until either side runs out. Always returns a total
// bijection.
Alignment greedy_align(const Graph& g1, const Graph& g2);

// Cayley expander aligned so that distance-d pairs of the base graph land on
// expander edges where the greedy matching allows.
RewirePlan rewirer_aligned_cayley(const Graph& g, int d, int layers);

// Rewired edge set is exactly the pairs at distance d.
RewirePlan rewirer_distance_d_pairs(const Graph& g, int d, int layers);

RewirePlan rewirer_fully_connected(const Graph& g, int layers);

// Separate trimmed Cayley expander per colour class, embedded on the class
// nodes in ascending index order. Clusters are not connected to each other.
RewirePlan rewirer_cayley_clusters(const Graph& g, int layers, bool include_uncoloured = false);

// Clique per colour class; uncoloured nodes form one extra clique by default.
RewirePlan rewirer_fully_connected_clusters(const Graph& g, int layers,
                                            bool include_uncoloured = true);

// |E(rewired) ∩ target_pairs|.
int captured_pairs(const Graph& rewired, const std::vector<Edge>& target_pairs);

}  // namespace rewirekit
