#ifndef TWOEIG_LINEGRAPH_HPP
#define TWOEIG_LINEGRAPH_HPP

#include <utility>
#include <vector>

#include "twoeig/signed_graph.hpp"
#include "twoeig/signed_matrix.hpp"
#include "twoeig/tolerances.hpp"

namespace twoeig {

// Vertex-edge incidence matrix of a signed graph.  Each edge column has two
// nonzero entries at its endpoints whose product equals the NEGATED edge
// sign; under that convention 2I - H^t H is the signed line graph (positive
// cycles stay positive and edge triples through a vertex become negative
// triangles).  Canonical column for edge (u,v), u < v: H(u,c) = +1,
// H(v,c) = -sign(uv).  Any other valid choice differs by column negations,
// which do not move the line-graph spectrum.
struct IncidenceMatrix {
    SignedMatrix h;                           // n x m
    std::vector<std::pair<int, int>> edges;   // lexicographic column order
};

IncidenceMatrix incidence(const SignedGraph& g);

// Signed line graph on the m edges: adjacency 2I - H^t H.
// Requires a simple ground (always true for SignedGraph).
SignedGraph line_graph(const SignedGraph& g);

struct LineSpectrumCheck {
    bool pass = false;
    int k = 0;
    int n = 0;
    int m = 0;
    int balanced = 0; // b(Sigma): balanced components of the input
    double max_dev = 0.0;
    std::vector<double> expected;
    std::vector<double> actual;
    std::string detail;
};

// Checks the line-graph spectrum rule on a k-regular input: the line graph's
// eigenvalues are {lambda - k + 2} over all input eigenvalues except the
// b(Sigma) copies of k, plus 2 with multiplicity m - n + b(Sigma).
LineSpectrumCheck verify_line_spectrum(const SignedGraph& g, const Tolerances& tol = {});

// negate(line_graph(complete_positive(n))): a 2(n-2)-regular graph on
// C(n,2) vertices with exact spectrum [(n-2)^(n-1), (-2)^(C(n,2)-n+1)].
SignedGraph neg_line_complete(int n);

} // namespace twoeig

#endif
