#include <doctest.h>

#include "oracles.hpp"
#include "rewirekit/cayley.hpp"

using namespace rewirekit;

namespace {

GroupElement group_inverse(const GroupElement& g, std::uint32_t n) {
    // det 1 => inverse is [[d, -b], [-c, a]]
    return GroupElement{g.d, (n - g.b % n) % n, (n - g.c % n) % n, g.a};
}

}  // namespace

TEST_CASE("cayley_size closed form") {
    CHECK(cayley_size(1) == 1);
    CHECK(cayley_size(2) == 6);
    CHECK(cayley_size(3) == 24);
    CHECK(cayley_size(4) == 48);
    CHECK(cayley_size(5) == 120);
    CHECK(cayley_size(6) == 144);
    CHECK(cayley_size(7) == 336);
    CHECK(cayley_size(8) == 384);
    CHECK_THROWS(cayley_size(0));
}

TEST_CASE("cayley_size equals brute-force enumeration for n=1..8") {
    for (std::uint32_t n = 1; n <= 8; ++n)
        CHECK(cayley_size(n) == oracle::sl2_enumeration(n).size());
}

TEST_CASE("build_cayley structure") {
    CHECK_THROWS(build_cayley(1));

    const CayleyGraph c2 = build_cayley(2);
    CHECK(c2.graph.num_nodes() == 6);
    CHECK(is_connected(c2.graph));
    CHECK_FALSE(c2.trimmed);
    CHECK(c2.provenance[0] == group_identity());

    const CayleyGraph c3 = build_cayley(3);
    CHECK(c3.graph.num_nodes() == 24);
    CHECK(is_connected(c3.graph));
    for (int u = 0; u < c3.graph.num_nodes(); ++u) CHECK(c3.graph.degree(u) == 4);

    for (std::uint32_t n = 2; n <= 8; ++n)
        CHECK(build_cayley(n).graph.num_nodes() == static_cast<int>(cayley_size(n)));
}

TEST_CASE("untrimmed cayley graphs are degree-regular with degree <= 4") {
    for (std::uint32_t n = 2; n <= 6; ++n) {
        const CayleyGraph c = build_cayley(n);
        const int d0 = c.graph.degree(0);
        CHECK(d0 <= 4);
        for (int u = 0; u < c.graph.num_nodes(); ++u) CHECK(c.graph.degree(u) == d0);
    }
}

TEST_CASE("provenance entries are canonical det-1 matrices") {
    for (std::uint32_t n = 2; n <= 5; ++n) {
        const CayleyGraph c = build_cayley(n);
        for (const GroupElement& g : c.provenance) {
            CHECK(g.a < n);
            CHECK(g.b < n);
            CHECK(g.c < n);
            CHECK(g.d < n);
            const std::uint64_t det =
                (std::uint64_t(g.a) * g.d % n + n - std::uint64_t(g.b) * g.c % n) % n;
            CHECK(det == 1 % n);
        }
    }
}

TEST_CASE("edges are exactly the group-action pairs") {
    for (std::uint32_t n : {2u, 3u, 4u}) {
        const CayleyGraph c = build_cayley(n);
        const std::uint32_t minus_one = n - 1;
        const std::array<GroupElement, 4> gens = {
            GroupElement{1, 1, 0, 1}, GroupElement{1, minus_one % n, 0, 1},
            GroupElement{1, 0, 1, 1}, GroupElement{1, 0, minus_one % n, 1}};
        for (int u = 0; u < c.graph.num_nodes(); ++u) {
            for (int v = u + 1; v < c.graph.num_nodes(); ++v) {
                const GroupElement rel = group_multiply(
                    group_inverse(c.provenance[static_cast<std::size_t>(u)], n),
                    c.provenance[static_cast<std::size_t>(v)], n);
                const bool generator_pair =
                    std::find(gens.begin(), gens.end(), rel) != gens.end();
                CHECK(c.graph.has_edge(u, v) == generator_pair);
            }
        }
    }
}

TEST_CASE("minimal_n_for") {
    CHECK(minimal_n_for(1) == 2);
    CHECK(minimal_n_for(6) == 2);
    CHECK(minimal_n_for(7) == 3);
    CHECK(minimal_n_for(24) == 3);
    CHECK(minimal_n_for(25) == 4);
    CHECK(minimal_n_for(50) == 5);
    CHECK_THROWS(minimal_n_for(0));
}

TEST_CASE("trimmed_cayley") {
    const CayleyGraph full6 = trimmed_cayley(6);
    CHECK(full6.trimmed);
    CHECK(full6.graph.num_nodes() == 6);
    CHECK(full6.graph.edges() == build_cayley(2).graph.edges());

    const CayleyGraph single = trimmed_cayley(1);
    CHECK(single.graph.num_nodes() == 1);
    CHECK(single.graph.num_edges() == 0);

    const CayleyGraph ten = trimmed_cayley(10);
    CHECK(ten.graph.num_nodes() == 10);
    CHECK(ten.n == 3);
    CHECK(is_connected(ten.graph));

    CHECK_THROWS(trimmed_cayley(0));
}

TEST_CASE("trimmed cayley graphs stay connected") {
    for (int size = 1; size <= 60; ++size) {
        const CayleyGraph c = trimmed_cayley(size);
        CHECK(c.graph.num_nodes() == size);
        CHECK(is_connected(c.graph));
    }
}

TEST_CASE("trimming keeps a BFS prefix from the identity") {
    const CayleyGraph full = build_cayley(4);
    const std::vector<int> order = bfs_order(full.graph, 0);
    const CayleyGraph cut = trimmed_cayley(30);
    for (int i = 0; i < 30; ++i)
        CHECK(cut.provenance[static_cast<std::size_t>(i)] ==
              full.provenance[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
}
