#ifndef TWOEIG_STARCOMP_HPP
#define TWOEIG_STARCOMP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twoeig/qext.hpp"
#include "twoeig/signed_graph.hpp"

namespace twoeig {

struct StarSetCheck {
    bool pass = false;
    // mu is an eigenvalue of the complement block, so X cannot be a star set.
    bool mu_in_complement = false;
};

// X is a star set for mu iff mu is not an eigenvalue of the complement
// block C and mu*I - A_X = B (mu*I - C)^{-1} B^t.  Verified exactly over
// Q(sqrt(d)): the inverse is never formed, the identity is checked through
// a linear solve.  X must be a nonempty proper subset.
StarSetCheck is_star_set(const SignedGraph& g, std::span<const int> x, const QExt& mu);

struct PartitionCheck {
    bool pass = false;
    std::string detail; // which block/eigenvalue failed, when not passing
};

// Two-sided star partition identity for spectrum [l1^{|X|}, l2^{|Y|}]:
//   l1 not an eigenvalue of A_Y  and  l1*I - A_X = B (l1*I - A_Y)^{-1} B^t,
//   l2 not an eigenvalue of A_X  and  l2*I - A_Y = B^t (l2*I - A_X)^{-1} B.
// X and Y must partition the vertex set.  All arithmetic exact.
PartitionCheck verify_partition(const SignedGraph& g, std::span<const int> x,
                                std::span<const int> y, const QExt& l1, const QExt& l2);

// Smallest (lexicographically) vertex set of the given size whose removal
// leaves mu out of the spectrum of the rest; nullopt when no candidate
// subset works.  size should be the multiplicity of mu.
std::optional<std::vector<int>> find_star_set(const SignedGraph& g, const QExt& mu, int size);

} // namespace twoeig

#endif
