#include "twoeig/linegraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twoeig/spectra.hpp"

namespace twoeig {

IncidenceMatrix incidence(const SignedGraph& g) {
    const auto edge_list = g.edges();
    const int n = g.order();
    const int m = static_cast<int>(edge_list.size());
    IntMatrix h(n, m);
    std::vector<std::pair<int, int>> order;
    order.reserve(edge_list.size());
    for (int c = 0; c < m; ++c) {
        const auto& e = edge_list[c];
        h(e.u, c) = 1;
        h(e.v, c) = -e.sign;
        order.emplace_back(e.u, e.v);
    }
    return {SignedMatrix(std::move(h)), std::move(order)};
}

SignedGraph line_graph(const SignedGraph& g) {
    const IncidenceMatrix inc = incidence(g);
    const int m = inc.h.cols();
    const IntMatrix ht = inc.h.matrix().transposed();
    const IntMatrix a = IntMatrix::identity(m).scaled(2) - ht * inc.h.matrix();
    // from_adjacency re-checks the {-1,0,1} domain and the zero diagonal,
    // both automatic for simple grounds
    return SignedGraph::from_adjacency(a);
}

LineSpectrumCheck verify_line_spectrum(const SignedGraph& g, const Tolerances& tol) {
    const auto reg = regularity(g);
    if (!reg) throw std::invalid_argument("verify_line_spectrum requires a regular graph");

    LineSpectrumCheck out;
    out.k = *reg;
    out.n = g.order();
    out.m = static_cast<int>(g.edge_count());
    out.balanced = balanced_components(g).balanced_count();

    const std::vector<double> ev = jacobi_eigenvalues(g.adjacency(), tol.jacobi_offdiag);

    // the top b(Sigma) eigenvalues must be the +k copies
    for (int i = 0; i < out.balanced; ++i) {
        const double v = ev[ev.size() - 1 - i];
        if (std::abs(v - out.k) > tol.compare) {
            out.detail = "multiplicity of k does not match the balanced component count";
            return out;
        }
    }

    std::vector<double> expected;
    for (std::size_t i = 0; i + out.balanced < ev.size(); ++i)
        expected.push_back(ev[i] - out.k + 2.0);
    expected.insert(expected.end(), static_cast<std::size_t>(out.m - out.n + out.balanced), 2.0);
    std::sort(expected.begin(), expected.end());

    std::vector<double> actual = jacobi_eigenvalues(line_graph(g).adjacency(), tol.jacobi_offdiag);

    out.expected = std::move(expected);
    out.actual = std::move(actual);
    if (out.expected.size() != out.actual.size()) {
        out.detail = "eigenvalue count mismatch";
        return out;
    }
    for (std::size_t i = 0; i < out.expected.size(); ++i)
        out.max_dev = std::max(out.max_dev, std::abs(out.expected[i] - out.actual[i]));
    out.pass = out.max_dev <= tol.cluster;
    if (!out.pass) out.detail = "eigenvalue lists deviate by " + std::to_string(out.max_dev);
    return out;
}

SignedGraph neg_line_complete(int n) {
    if (n < 3) throw std::invalid_argument("neg_line_complete requires n >= 3");
    return line_graph(SignedGraph::complete_positive(n)).negated();
}

} // namespace twoeig
