#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "twoeig/doubling.hpp"
#include "twoeig/signed_graph.hpp"
#include "twoeig/spectra.hpp"

using namespace twoeig;
using twoeig::testing::random_signed_circulant;
using twoeig::testing::random_signed_graph;

namespace {

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

} // namespace

TEST_CASE("from_edge_list basics and errors") {
    SignedGraph k2 = SignedGraph::from_edge_list(2, {{0, 1, 1}});
    CHECK(k2.sign(0, 1) == 1);
    CHECK(k2.sign(1, 0) == 1);
    CHECK(k2.sign(0, 0) == 0);
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_WITH_AS((SignedGraph::from_edge_list(3, {{0, 0, 1}})),
                         "self-loop at vertex 0", std::invalid_argument);
    CHECK_THROWS_WITH_AS((SignedGraph::from_edge_list(2, {{0, 1, 1}, {1, 0, -1}})),
                         "duplicate edge (1,0)", std::invalid_argument);
    CHECK_THROWS_AS((SignedGraph::from_edge_list(2, {{0, 2, 1}})), std::invalid_argument);
    CHECK_THROWS_AS((SignedGraph::from_edge_list(2, {{0, 1, 2}})), std::invalid_argument);
}

TEST_CASE("from_adjacency validates") {
    IntMatrix a(2, 2);
    a(0, 1) = 1;
    CHECK_THROWS_AS(SignedGraph::from_adjacency(a), std::invalid_argument); // asymmetric
    a(1, 0) = 1;
    CHECK(SignedGraph::from_adjacency(a).edge_count() == 1);
    a(0, 0) = 1;
    CHECK_THROWS_AS(SignedGraph::from_adjacency(a), std::invalid_argument); // loop
}

TEST_CASE("regularity") {
    CHECK(regularity(SignedGraph::from_edge_list(2, {{0, 1, 1}})) == 1);
    CHECK(regularity(pentagon_seed()) == 5);
    // path on 3 vertices: degrees 1, 2, 1
    SignedGraph p3 = SignedGraph::from_edge_list(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_FALSE(regularity(p3).has_value());
    CHECK(regularity(SignedGraph::complete_positive(6)) == 5);
}

TEST_CASE("negation") {
    std::mt19937 rng(3);
    SignedGraph g = random_signed_graph(rng, 8, 0.5);
    CHECK(g.negated().negated() == g);

    SignedGraph k4 = SignedGraph::complete_positive(4);
    for (const auto& e : k4.negated().edges()) CHECK(e.sign == -1);

    // spectrum of -G is the negated spectrum
    SignedGraph pent = pentagon_seed();
    auto ev = jacobi_eigenvalues(pent.adjacency());
    auto evn = jacobi_eigenvalues(pent.negated().adjacency());
    std::vector<double> flipped;
    for (auto it = ev.rbegin(); it != ev.rend(); ++it) flipped.push_back(-*it);
    CHECK(spectra_match(evn, flipped, 1e-8));
}

TEST_CASE("switching") {
    std::mt19937 rng(17);
    SignedGraph g = random_signed_graph(rng, 10, 0.4);
    CHECK(g.switched(std::vector<int>{}) == g);
    std::vector<int> all(10);
    for (int i = 0; i < 10; ++i) all[i] = i;
    CHECK(g.switched(all) == g);
    CHECK_THROWS_AS(g.switched(std::vector<int>{10}), std::invalid_argument);
}

TEST_CASE("switching preserves the spectrum") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 10; ++iter) {
        std::uniform_int_distribution<int> size(4, 64);
        const int n = size(rng);
        SignedGraph g = random_signed_graph(rng, n, 0.3);
        std::vector<int> s;
        std::uniform_int_distribution<int> coin(0, 1);
        for (int v = 0; v < n; ++v)
            if (coin(rng)) s.push_back(v);
        auto ev = jacobi_eigenvalues(g.adjacency());
        auto evs = jacobi_eigenvalues(g.switched(s).adjacency());
        CHECK(spectra_match(ev, evs, 1e-8));
    }
}

TEST_CASE("balanced components") {
    auto kn = balanced_components(SignedGraph::complete_positive(5));
    CHECK(kn.components.size() == 1);
    CHECK(kn.balanced_count() == 1);

    SignedGraph neg_tri =
        SignedGraph::from_edge_list(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
    auto nt = balanced_components(neg_tri);
    CHECK(nt.components.size() == 1);
    CHECK(nt.balanced_count() == 0);

    // two components: positive triangle (balanced) + all-negative triangle
    SignedGraph two = SignedGraph::from_edge_list(
        6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, -1}, {4, 5, -1}, {3, 5, -1}});
    auto tc = balanced_components(two);
    CHECK(tc.components.size() == 2);
    CHECK(tc.balanced_count() == 1);
    CHECK(tc.components[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("eigenvalue k multiplicity equals the balanced component count") {
    // k-regular fixtures: mult of +k = b(G), mult of -k = b(-G)
    std::vector<SignedGraph> fixtures;
    fixtures.push_back(SignedGraph::complete_positive(6)); // b = 1
    fixtures.push_back(pentagon_seed());                   // b = 0
    fixtures.push_back(SignedGraph::from_edge_list(
        4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}})); // C4+, b = 1
    fixtures.push_back(SignedGraph::from_edge_list(
        4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}})); // unbalanced C4, b = 0
    fixtures.push_back(SignedGraph::from_edge_list(
        6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, -1}, {4, 5, -1}, {3, 5, -1}}));
    std::mt19937 rng(5);
    fixtures.push_back(random_signed_circulant(rng, 9));

    for (const auto& g : fixtures) {
        const auto k = regularity(g);
        REQUIRE(k.has_value());
        auto count_near = [&](double target) {
            int c = 0;
            for (double v : jacobi_eigenvalues(g.adjacency()))
                if (std::abs(v - target) < 1e-6) ++c;
            return c;
        };
        CHECK(count_near(*k) == balanced_components(g).balanced_count());
        CHECK(count_near(-*k) == balanced_components(g.negated()).balanced_count());
    }
}

TEST_CASE("bipartite ground") {
    CHECK(is_bipartite_ground(SignedGraph::from_edge_list(2, {{0, 1, 1}})));
    CHECK_FALSE(is_bipartite_ground(pentagon_seed()));
    CHECK(is_bipartite_ground(
        SignedGraph::from_edge_list(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}, {0, 3, -1}})));
    CHECK_FALSE(is_bipartite_ground(SignedGraph::complete_positive(3)));
}

TEST_CASE("connectivity") {
    CHECK(is_connected_ground(SignedGraph::complete_positive(4)));
    CHECK_FALSE(is_connected_ground(
        SignedGraph::from_edge_list(4, {{0, 1, 1}, {2, 3, 1}})));
    CHECK(is_connected_ground(SignedGraph::from_edge_list(1, {})));
}

TEST_CASE("complete_positive spectra") {
    CHECK(SignedGraph::complete_positive(2).edge_count() == 1);
    for (int n : {5, 6}) {
        auto ev = jacobi_eigenvalues(SignedGraph::complete_positive(n).adjacency());
        for (int i = 0; i + 1 < n; ++i) CHECK(ev[i] == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(ev.back() == doctest::Approx(n - 1.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(SignedGraph::complete_positive(0), std::invalid_argument);
}

TEST_CASE("constructed graphs stay symmetric with a zero diagonal") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 20; ++iter) {
        SignedGraph g = random_signed_graph(rng, 12, 0.5);
        const IntMatrix a = g.adjacency();
        CHECK(a.is_symmetric());
        for (int i = 0; i < g.order(); ++i) CHECK(a(i, i) == 0);
    }
}
