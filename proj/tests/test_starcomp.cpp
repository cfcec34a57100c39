#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "twoeig/doubling.hpp"
#include "twoeig/linegraph.hpp"
#include "twoeig/spectra.hpp"
#include "twoeig/starcomp.hpp"
#include "twoeig/weighing.hpp"

using namespace twoeig;

namespace {

std::vector<int> complement(int n, const std::vector<int>& x) {
    std::vector<char> in(n, 0);
    for (int v : x) in[v] = 1;
    std::vector<int> y;
    for (int v = 0; v < n; ++v)
        if (!in[v]) y.push_back(v);
    return y;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out(hi - lo);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

} // namespace

TEST_CASE("single edge, by hand") {
    const SignedGraph k2 = SignedGraph::from_edge_list(2, {{0, 1, 1}});
    // C = [0], (1 - 0)^{-1} = 1, and 1 - A_X = B * 1 * B^t = 1
    CHECK(is_star_set(k2, std::vector<int>{0}, QExt(1)).pass);
    CHECK(is_star_set(k2, std::vector<int>{0}, QExt(-1)).pass);

    // mu = 0 is the complement's eigenvalue
    const auto zero = is_star_set(k2, std::vector<int>{0}, QExt(0));
    CHECK_FALSE(zero.pass);
    CHECK(zero.mu_in_complement);

    CHECK_THROWS_AS(is_star_set(k2, std::vector<int>{0, 1}, QExt(1)), std::invalid_argument);
    CHECK_THROWS_AS(is_star_set(k2, std::vector<int>{}, QExt(1)), std::invalid_argument);
}

TEST_CASE("star sets found on the negated line graph of K5+") {
    const SignedGraph g = neg_line_complete(5); // spectrum [3^4, (-2)^6]
    const auto x = find_star_set(g, QExt(3), 4);
    REQUIRE(x.has_value());
    CHECK(is_star_set(g, *x, QExt(3)).pass);

    const auto y = find_star_set(g, QExt(-2), 6);
    REQUIRE(y.has_value());
    CHECK(is_star_set(g, *y, QExt(-2)).pass);

    // mu = 1 is not an eigenvalue, so no subset works
    CHECK_FALSE(find_star_set(g, QExt(1), 4).has_value());
    CHECK_THROWS_AS(find_star_set(g, QExt(3), 10), std::invalid_argument);
}

TEST_CASE("star sets on the first-m block of assembled graphs") {
    const SignedGraph g =
        assemble_block(build_weighing(pattern_x(8)), build_weighing(pattern_y(8)));
    CHECK(is_star_set(g, range(0, 8), QExt(4)).pass);
    CHECK(is_star_set(g, range(8, 24), QExt(-2)).pass);
    // the lexicographically first 8-subset already works
    CHECK(find_star_set(g, QExt(4), 8) == range(0, 8));
}

TEST_CASE("partition identities reproduce the block-construction argument") {
    for (int m : {8, 14}) {
        CAPTURE(m);
        const SignedGraph g =
            assemble_block(build_weighing(pattern_x(m)), build_weighing(pattern_y(m)));
        const auto check =
            verify_partition(g, range(0, m), range(m, 3 * m), QExt(4), QExt(-2));
        CHECK(check.pass);
        CHECK(check.detail.empty());

        // consistency with the exact spectrum
        const auto spec = two_eigenvalue_spectrum(g);
        REQUIRE(spec.has_value());
        CHECK(spec->lambda1_exact() == QExt(4));
        CHECK(spec->lambda2_exact() == QExt(-2));
        CHECK(spec->m1 == m);
        CHECK(spec->m2 == 2 * m);
    }
}

TEST_CASE("partition over Q(sqrt(5)) for the pentagon seed") {
    const SignedGraph g = pentagon_seed();
    const QExt root5 = QExt::sqrt_of(5);

    const auto x = find_star_set(g, root5, 3);
    REQUIRE(x.has_value());
    const auto y = complement(6, *x);
    const auto check = verify_partition(g, *x, y, root5, -root5);
    CHECK(check.pass);

    const auto spec = two_eigenvalue_spectrum(g);
    REQUIRE(spec.has_value());
    CHECK(spec->lambda1_exact() == root5);
    CHECK(spec->m1 == 3);
}

TEST_CASE("partition rejections carry a reason") {
    const SignedGraph g = neg_line_complete(5);
    // sizes (5,5) cannot match multiplicities (4,6)
    const auto bad = verify_partition(g, range(0, 5), range(5, 10), QExt(3), QExt(-2));
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.detail.empty());

    // lambda2 = -2 is an eigenvalue of most induced blocks; check reporting
    const auto sized = verify_partition(g, range(0, 4), range(4, 10), QExt(3), QExt(-2));
    if (!sized.pass) CHECK_FALSE(sized.detail.empty());

    CHECK_THROWS_AS(
        verify_partition(g, range(0, 4), range(3, 10), QExt(3), QExt(-2)),
        std::invalid_argument); // overlap
    CHECK_THROWS_AS(
        verify_partition(g, range(0, 4), range(5, 10), QExt(3), QExt(-2)),
        std::invalid_argument); // vertex 4 missing
}

TEST_CASE("star-set checks are invariant under relabeling") {
    const SignedGraph g = pentagon_seed();
    const QExt root5 = QExt::sqrt_of(5);
    const auto x = find_star_set(g, root5, 3);
    REQUIRE(x.has_value());

    std::mt19937 rng(67);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int iter = 0; iter < 5; ++iter) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<EdgeSpec> edges;
        for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
        const SignedGraph h = SignedGraph::from_edge_list(6, edges);
        std::vector<int> xp;
        for (int v : *x) xp.push_back(perm[v]);
        CHECK(is_star_set(h, xp, root5).pass);
    }
}

TEST_CASE("integer eigenvalues take the rational path") {
    // the same identities hold whether mu is built as an integer or as a
    // degenerate quadratic-field element
    const SignedGraph g = neg_line_complete(5);
    const auto x = find_star_set(g, QExt(3), 4);
    REQUIRE(x.has_value());
    const QExt three(mpq_class(3), mpq_class(0), 0);
    CHECK(three.is_rational());
    CHECK(is_star_set(g, *x, three).pass);
}
