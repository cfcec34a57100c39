#include "twoeig/doubling.hpp"

#include <stdexcept>
#include <string>

namespace twoeig {

SignedGraph doubled(const SignedGraph& g) {
    const auto reg = regularity(g);
    if (!reg) throw std::invalid_argument("doubling requires a regular graph");
    const int n = g.order();
    const std::int64_t k = *reg;
    const IntMatrix a = g.adjacency();
    const IntMatrix sq = a * a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::int64_t want = i == j ? k : 0;
            if (sq(i, j) != want)
                throw std::invalid_argument(
                    "doubling requires A^2 = kI; entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") of A^2 is " + std::to_string(sq(i, j)) +
                    ", expected " + std::to_string(want));
        }

    IntMatrix out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(n + i, n + j) = -a(i, j);
        }
        out(i, n + i) = 1;
        out(n + i, i) = 1;
    }
    return SignedGraph::from_adjacency(out);
}

SignedGraph k2_seed() { return SignedGraph::from_edge_list(2, {{0, 1, 1}}); }

SignedGraph pentagon_seed() {
    std::vector<EdgeSpec> edges;
    const auto negative = [](int u, int v) {
        // 1-indexed negative pairs of the drawing: {2,3},{2,4},{3,5},{4,6},{5,6}
        auto is = [&](int a, int b) { return (u == a - 1 && v == b - 1); };
        return is(2, 3) || is(2, 4) || is(3, 5) || is(4, 6) || is(5, 6);
    };
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.push_back({u, v, negative(u, v) ? -1 : 1});
    SignedGraph g = SignedGraph::from_edge_list(6, edges);

    // fixture self-check: A^2 = 5I must hold, otherwise the transcription
    // (or the +1 = blue reading) is wrong
    const IntMatrix sq = g.adjacency() * g.adjacency();
    if (sq != IntMatrix::identity(6).scaled(5))
        throw std::logic_error("pentagon seed failed its A^2 = 5I self-check");
    return g;
}

SignedGraph chain_from(const SignedGraph& seed, int target_k, int max_order) {
    const auto reg = regularity(seed);
    if (!reg) throw std::invalid_argument("chain seed must be regular");
    if (target_k < *reg)
        throw std::invalid_argument("target valency " + std::to_string(target_k) +
                                    " below the seed valency " + std::to_string(*reg));
    SignedGraph g = seed;
    for (int k = *reg; k < target_k; ++k) {
        if (2 * g.order() > max_order)
            throw std::runtime_error("chain would exceed the size guard of " +
                                     std::to_string(max_order) + " vertices");
        g = doubled(g);
    }
    return g;
}

} // namespace twoeig
