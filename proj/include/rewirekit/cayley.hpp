#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rewirekit/graph.hpp"

namespace rewirekit {

// Element of SL(2, Z_n): row-major 2x2 matrix entries in [0, n) with
// determinant 1 mod n.
struct GroupElement {
    std::uint32_t a, b, c, d;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    // Canonical lexicographic order on (a,b,c,d).
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_identity();
GroupElement group_multiply(const GroupElement& x, const GroupElement& y, std::uint32_t n);

struct CayleyGraph {
    Graph graph;
    std::uint32_t n = 0;
    std::vector<GroupElement> provenance;  // node index -> group element
    bool trimmed = false;
};

// |SL(2, Z_n)| = n^3 * prod_{prime p | n} (1 - 1/p^2), exact.
std::uint64_t cayley_size(std::uint32_t n);

// Cayley graph of SL(2, Z_n) under the symmetric closure of the two
// upper/lower unitriangular generators. Node 0 is the identity; the rest
// follow breadth-first order with generators applied in the fixed order
// (g1, g1^-1, g2, g2^-1). Degree is 4 for n >= 3; generator coincidences
// at n = 2 collapse duplicate edges.
CayleyGraph build_cayley(std::uint32_t n);

// Smallest n >= 2 with cayley_size(n) >= size.
std::uint32_t minimal_n_for(std::uint64_t size);

// First `size` BFS-visited nodes of build_cayley(minimal_n_for(size)), with
// the induced subgraph, relabelled 0..size-1 in visit order. Connected.
CayleyGraph trimmed_cayley(int size);

}  // namespace rewirekit
