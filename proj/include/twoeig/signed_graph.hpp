#ifndef TWOEIG_SIGNED_GRAPH_HPP
#define TWOEIG_SIGNED_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twoeig/dense_matrix.hpp"

namespace twoeig {

struct EdgeSpec {
    int u = 0;
    int v = 0;
    int sign = 1;

    bool operator==(const EdgeSpec&) const = default;
};

// Immutable signed graph: a simple graph with every edge labelled +1 or -1,
// stored as the full symmetric {-1,0,1} adjacency matrix with zero diagonal.
class SignedGraph {
public:
    static SignedGraph from_edge_list(int n, std::span<const EdgeSpec> edges);
    static SignedGraph from_edge_list(int n, std::initializer_list<EdgeSpec> edges);
    // Validates symmetry, zero diagonal and the entry domain.
    static SignedGraph from_adjacency(const IntMatrix& a);
    static SignedGraph complete_positive(int n);

    int order() const noexcept { return n_; }
    int sign(int u, int v) const { return a_[static_cast<std::size_t>(u) * n_ + v]; }
    int degree(int v) const;
    std::size_t edge_count() const;
    std::vector<EdgeSpec> edges() const; // lexicographic, u < v

    IntMatrix adjacency() const;

    // Ground graph with every edge sign flipped.
    SignedGraph negated() const;
    // Flips the sign of every edge with exactly one endpoint in s;
    // preserves the spectrum.
    SignedGraph switched(std::span<const int> s) const;

    bool operator==(const SignedGraph&) const = default;

private:
    explicit SignedGraph(int n);

    int n_ = 0;
    std::vector<std::int8_t> a_;
};

// Common vertex degree of the ground graph, or nullopt if not regular.
std::optional<int> regularity(const SignedGraph& g);

struct GroundPartition {
    std::vector<std::vector<int>> components;
    std::vector<bool> balanced; // one flag per component
    int balanced_count() const;
};

// Connected components of the ground plus a balance flag per component.
// A component is balanced iff a +-1 vertex potential p exists with
// sign(uv) = p(u)p(v) on all its edges; tested by BFS potential assignment.
GroundPartition balanced_components(const SignedGraph& g);

bool is_bipartite_ground(const SignedGraph& g);
bool is_connected_ground(const SignedGraph& g);

} // namespace twoeig

#endif
