#include "rewirekit/cayley.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace rewirekit {

namespace {

std::array<GroupElement, 4> symmetric_generators(std::uint32_t n) {
    const std::uint32_t minus_one = n - 1;  // -1 mod n
    const GroupElement g1{1, 1, 0, 1};
    const GroupElement g1_inv{1, minus_one % n, 0, 1};
    const GroupElement g2{1, 0, 1, 1};
    const GroupElement g2_inv{1, 0, minus_one % n, 1};
    return {g1, g1_inv, g2, g2_inv};
}

}  // namespace

GroupElement group_identity() { return {1, 0, 0, 1}; }

GroupElement group_multiply(const GroupElement& x, const GroupElement& y, std::uint32_t n) {
    const std::uint64_t m = n;
    return {
        static_cast<std::uint32_t>((std::uint64_t(x.a) * y.a + std::uint64_t(x.b) * y.c) % m),
        static_cast<std::uint32_t>((std::uint64_t(x.a) * y.b + std::uint64_t(x.b) * y.d) % m),
        static_cast<std::uint32_t>((std::uint64_t(x.c) * y.a + std::uint64_t(x.d) * y.c) % m),
        static_cast<std::uint32_t>((std::uint64_t(x.c) * y.b + std::uint64_t(x.d) * y.d) % m),
    };
}

std::uint64_t cayley_size(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("cayley_size: n must be positive");
    std::uint64_t size = std::uint64_t(n) * n * n;
    std::uint32_t rest = n;
    for (std::uint32_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        size = size / (std::uint64_t(p) * p) * (std::uint64_t(p) * p - 1);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) size = size / (std::uint64_t(rest) * rest) * (std::uint64_t(rest) * rest - 1);
    return size;
}

CayleyGraph build_cayley(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("build_cayley: n must be >= 2");
    const auto gens = symmetric_generators(n);

    std::vector<GroupElement> elements;
    std::map<GroupElement, int> index;
    std::queue<int> frontier;

    elements.push_back(group_identity());
    index.emplace(elements[0], 0);
    frontier.push(0);

    std::vector<Edge> edges;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        const GroupElement base = elements[static_cast<std::size_t>(u)];
        for (const GroupElement& s : gens) {
            const GroupElement next = group_multiply(base, s, n);
            auto [it, inserted] = index.emplace(next, static_cast<int>(elements.size()));
            if (inserted) {
                elements.push_back(next);
                frontier.push(it->second);
            }
            edges.emplace_back(u, it->second);
        }
    }

    const std::uint64_t expected = cayley_size(n);
    if (elements.size() != expected)
        throw std::logic_error("build_cayley: generators did not reach the whole group");

    CayleyGraph result;
    result.graph = Graph(static_cast<int>(elements.size()), edges);
    result.n = n;
    result.provenance = std::move(elements);
    result.trimmed = false;
    return result;
}

std::uint32_t minimal_n_for(std::uint64_t size) {
    if (size == 0) throw std::invalid_argument("minimal_n_for: size must be positive");
    for (std::uint32_t n = 2;; ++n) {
        if (cayley_size(n) >= size) return n;
    }
}

CayleyGraph trimmed_cayley(int size) {
    if (size < 1) throw std::invalid_argument("trimmed_cayley: size must be >= 1");
    CayleyGraph full = build_cayley(minimal_n_for(static_cast<std::uint64_t>(size)));

    // Node order of build_cayley is already the BFS order from the identity.
    std::vector<Edge> kept;
    for (const auto& [u, v] : full.graph.edges())
        if (u < size && v < size) kept.emplace_back(u, v);

    CayleyGraph result;
    result.graph = Graph(size, kept);
    result.n = full.n;
    result.provenance.assign(full.provenance.begin(), full.provenance.begin() + size);
    result.trimmed = true;
    return result;
}

}  // namespace rewirekit
