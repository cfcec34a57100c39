#ifndef TWOEIG_DOUBLING_HPP
#define TWOEIG_DOUBLING_HPP

#include "twoeig/signed_graph.hpp"

namespace twoeig {

// Doubling step [[A, I], [I, -A]]: sends a k-regular graph with A^2 = kI
// (spectrum +-sqrt(k)) to a (k+1)-regular graph on 2n vertices with
// Ac^2 = (k+1)I.  The precondition is checked exactly in integer
// arithmetic; violations report the first failing entry of A^2 - kI.
SignedGraph doubled(const SignedGraph& g);

// Single positive edge; spectrum [1, -1].
SignedGraph k2_seed();

// The 6-vertex signed complete graph of a symmetric conference matrix of
// order 6 (all edges positive except {2,3},{2,4},{3,5},{4,6},{5,6},
// 1-indexed); spectrum [sqrt(5)^3, (-sqrt(5))^3].  Construction self-checks
// A^2 = 5I and aborts on failure, which would signal a wrong edge-color
// reading of the drawing it was transcribed from.
SignedGraph pentagon_seed();

// Iterates the doubling step until the valency reaches target_k.
// Orders grow as n0 * 2^(target_k - k0); refuses to exceed max_order.
SignedGraph chain_from(const SignedGraph& seed, int target_k, int max_order = 4096);

} // namespace twoeig

#endif
