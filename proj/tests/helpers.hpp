#ifndef TWOEIG_TESTS_HELPERS_HPP
#define TWOEIG_TESTS_HELPERS_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twoeig/signed_graph.hpp"
#include "twoeig/signed_matrix.hpp"

namespace twoeig::testing {

// Parses rows of "1 - 0" tokens ('-' alone means -1) into a SignedMatrix.
inline SignedMatrix parse_signed_rows(const std::vector<std::string>& rows) {
    std::vector<std::vector<std::int64_t>> vals;
    for (const auto& row : rows) {
        std::istringstream in(row);
        std::string tok;
        std::vector<std::int64_t> r;
        while (in >> tok) {
            if (tok == "-")
                r.push_back(-1);
            else
                r.push_back(std::stoll(tok));
        }
        vals.push_back(std::move(r));
    }
    IntMatrix m(static_cast<int>(vals.size()), static_cast<int>(vals.front().size()));
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = 0; j < vals[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = vals[i][j];
    return SignedMatrix(std::move(m));
}

// Random signed circulant: regular ground by construction, random signs.
// Each offset class s < n/2 adds 2 to the valency, the half offset adds 1.
inline SignedGraph random_signed_circulant(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> offsets;
    while (offsets.empty()) {
        for (int s = 1; s <= n / 2; ++s)
            if (coin(rng)) offsets.push_back(s);
    }
    std::vector<EdgeSpec> edges;
    for (int s : offsets) {
        const int reps = (2 * s == n) ? n / 2 : n;
        for (int u = 0; u < reps; ++u)
            edges.push_back({u, (u + s) % n, coin(rng) ? 1 : -1});
    }
    return SignedGraph::from_edge_list(n, edges);
}

// Random signed graph with independent edges (not necessarily regular).
inline SignedGraph random_signed_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) edges.push_back({u, v, coin(rng) ? 1 : -1});
    return SignedGraph::from_edge_list(n, edges);
}

// ---- frozen worked order-14 pair (rows exactly as printed) ----

inline SignedMatrix frozen_w1_14() {
    return parse_signed_rows({
        "1 1 0 0 0 0 0 0 0 0 0 0 1 1",
        "1 - 1 1 0 0 0 0 0 0 0 0 0 0",
        "0 0 1 - 1 1 0 0 0 0 0 0 0 0",
        "0 0 0 0 1 - 1 1 0 0 0 0 0 0",
        "0 0 0 0 0 0 1 - 1 1 0 0 0 0",
        "0 0 0 0 0 0 0 0 1 - 1 1 0 0",
        "0 0 0 0 0 0 0 0 0 0 1 - 1 -",
        "1 1 0 0 0 0 0 0 0 0 0 0 - -",
        "1 - - - 0 0 0 0 0 0 0 0 0 0",
        "0 0 1 - - - 0 0 0 0 0 0 0 0",
        "0 0 0 0 1 - - - 0 0 0 0 0 0",
        "0 0 0 0 0 0 1 - - - 0 0 0 0",
        "0 0 0 0 0 0 0 0 1 - - - 0 0",
        "0 0 0 0 0 0 0 0 0 0 1 - - 1",
    });
}

inline SignedMatrix frozen_w2_14() {
    return parse_signed_rows({
        "0 0 1 1 0 0 0 0 0 0 1 1 0 0",
        "0 0 0 0 1 1 0 0 0 0 0 0 1 1",
        "1 1 0 0 0 0 1 1 0 0 0 0 0 0",
        "0 0 1 - 0 0 0 0 1 1 0 0 0 0",
        "0 0 0 0 1 - 0 0 0 0 1 - 0 0",
        "0 0 0 0 0 0 1 - 0 0 0 0 1 -",
        "1 - 0 0 0 0 0 0 1 - 0 0 0 0",
        "0 0 1 1 0 0 0 0 0 0 - - 0 0",
        "0 0 0 0 1 1 0 0 0 0 0 0 - -",
        "1 1 0 0 0 0 - - 0 0 0 0 0 0",
        "0 0 1 - 0 0 0 0 - - 0 0 0 0",
        "0 0 0 0 1 - 0 0 0 0 - 1 0 0",
        "0 0 0 0 0 0 1 - 0 0 0 0 - 1",
        "1 - 0 0 0 0 0 0 - 1 0 0 0 0",
    });
}

inline SignedMatrix frozen_x_14() {
    return parse_signed_rows({
        "1 0 0 0 0 0 1",
        "1 1 0 0 0 0 0",
        "0 1 1 0 0 0 0",
        "0 0 1 1 0 0 0",
        "0 0 0 1 1 0 0",
        "0 0 0 0 1 1 0",
        "0 0 0 0 0 1 1",
    });
}

inline SignedMatrix frozen_y_14() {
    return parse_signed_rows({
        "0 1 0 0 0 1 0",
        "0 0 1 0 0 0 1",
        "1 0 0 1 0 0 0",
        "0 1 0 0 1 0 0",
        "0 0 1 0 0 1 0",
        "0 0 0 1 0 0 1",
        "1 0 0 0 1 0 0",
    });
}

} // namespace twoeig::testing

#endif
