#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "twoeig/doubling.hpp"
#include "twoeig/linegraph.hpp"
#include "twoeig/spectra.hpp"

using namespace twoeig;
using twoeig::testing::random_signed_circulant;
using twoeig::testing::random_signed_graph;

TEST_CASE("incidence columns") {
    // positive edge -> column (1, -1); negative edge -> column (1, 1):
    // the column product is the negated edge sign
    auto pos = incidence(SignedGraph::from_edge_list(2, {{0, 1, 1}}));
    CHECK(pos.h(0, 0) == 1);
    CHECK(pos.h(1, 0) == -1);

    auto neg = incidence(SignedGraph::from_edge_list(2, {{0, 1, -1}}));
    CHECK(neg.h(0, 0) == 1);
    CHECK(neg.h(1, 0) == 1);

    std::mt19937 rng(2);
    for (int iter = 0; iter < 10; ++iter) {
        SignedGraph g = random_signed_graph(rng, 9, 0.45);
        auto inc = incidence(g);
        REQUIRE(inc.h.cols() == static_cast<int>(g.edge_count()));
        for (int c = 0; c < inc.h.cols(); ++c) {
            const auto [u, v] = inc.edges[c];
            int nonzeros = 0;
            for (int i = 0; i < inc.h.rows(); ++i)
                if (inc.h(i, c) != 0) ++nonzeros;
            CHECK(nonzeros == 2);
            CHECK(inc.h(u, c) * inc.h(v, c) == -g.sign(u, v));
        }
    }
}

TEST_CASE("incidence product identity for regular graphs") {
    // H H^t = kI - A under the negated-sign convention
    for (const SignedGraph& g :
         {SignedGraph::complete_positive(5), pentagon_seed(), neg_line_complete(5)}) {
        const auto k = regularity(g);
        REQUIRE(k.has_value());
        const auto inc = incidence(g);
        const IntMatrix prod = inc.h.matrix() * inc.h.matrix().transposed();
        CHECK(prod == IntMatrix::identity(g.order()).scaled(*k) - g.adjacency());
    }
}

TEST_CASE("line graph of small graphs") {
    // triangle: the line graph is again a triangle whose cycle stays positive
    SignedGraph k3 = SignedGraph::complete_positive(3);
    SignedGraph l3 = line_graph(k3);
    CHECK(l3.order() == 3);
    CHECK(regularity(l3) == 2);
    CHECK(l3.sign(0, 1) * l3.sign(1, 2) * l3.sign(0, 2) == 1);

    // a single edge collapses to one vertex
    CHECK(line_graph(SignedGraph::from_edge_list(2, {{0, 1, 1}})).order() == 1);

    // an edgeless graph has an empty line graph
    CHECK(line_graph(SignedGraph::from_edge_list(3, {})).order() == 0);
}

TEST_CASE("line graph of K5+ and the negated family") {
    SignedGraph l5 = line_graph(SignedGraph::complete_positive(5));
    CHECK(l5.order() == 10);
    CHECK(regularity(l5) == 6);
    auto spec = two_eigenvalue_spectrum(l5.negated());
    REQUIRE(spec.has_value());
    CHECK(spec->t == 1);
    CHECK(spec->k == 6);

    for (int n = 5; n <= 12; ++n) {
        auto s = two_eigenvalue_spectrum(neg_line_complete(n));
        REQUIRE(s.has_value());
        CHECK(s->t == n - 4);
        CHECK(s->k == 2 * (n - 2));
        CHECK(s->m1 == n - 1);
        CHECK(s->m2 == n * (n - 1) / 2 - n + 1);
    }
    CHECK_THROWS_AS(neg_line_complete(2), std::invalid_argument);
}

TEST_CASE("line graph diagonal is always zero") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 10; ++iter) {
        SignedGraph g = random_signed_graph(rng, 8, 0.5);
        const IntMatrix a = line_graph(g).adjacency();
        for (int i = 0; i < a.rows(); ++i) CHECK(a(i, i) == 0);
    }
}

TEST_CASE("column negations do not move the line-graph spectrum") {
    std::mt19937 rng(37);
    SignedGraph g = random_signed_circulant(rng, 8);
    const auto inc = incidence(g);
    const int m = inc.h.cols();

    const IntMatrix base =
        IntMatrix::identity(m).scaled(2) - inc.h.matrix().transposed() * inc.h.matrix();
    const auto want = jacobi_eigenvalues(base);

    std::uniform_int_distribution<int> coin(0, 1);
    for (int iter = 0; iter < 5; ++iter) {
        IntMatrix flipped = inc.h.matrix();
        for (int c = 0; c < m; ++c) {
            if (!coin(rng)) continue;
            for (int r = 0; r < flipped.rows(); ++r) flipped(r, c) = -flipped(r, c);
        }
        const IntMatrix alt = IntMatrix::identity(m).scaled(2) - flipped.transposed() * flipped;
        const auto got = jacobi_eigenvalues(alt);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
    }
}

TEST_CASE("line spectrum rule on named graphs") {
    CHECK(verify_line_spectrum(SignedGraph::complete_positive(5)).pass);
    CHECK(verify_line_spectrum(SignedGraph::complete_positive(6)).pass);
    CHECK(verify_line_spectrum(SignedGraph::complete_positive(7)).pass);
    CHECK(verify_line_spectrum(SignedGraph::from_edge_list(2, {{0, 1, 1}})).pass);
    CHECK(verify_line_spectrum(pentagon_seed()).pass);

    // balanced and anti-balanced inputs exercise the +-k eigenvalue handling
    SignedGraph c4 = SignedGraph::from_edge_list(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    CHECK(verify_line_spectrum(c4).pass);
    CHECK(verify_line_spectrum(c4.negated()).pass);

    CHECK_THROWS_AS(verify_line_spectrum(SignedGraph::from_edge_list(3, {{0, 1, 1}, {1, 2, 1}})),
                    std::invalid_argument);
}

TEST_CASE("line spectrum rule on random regular graphs") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> size(4, 12);
    for (int iter = 0; iter < 20; ++iter) {
        SignedGraph g = random_signed_circulant(rng, size(rng));
        const auto check = verify_line_spectrum(g);
        CAPTURE(iter);
        CAPTURE(check.detail);
        CHECK(check.pass);
        CHECK(check.max_dev <= 1e-6);
    }
}
