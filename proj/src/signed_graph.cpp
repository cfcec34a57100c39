#include "twoeig/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace twoeig {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

SignedGraph::SignedGraph(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

SignedGraph SignedGraph::from_edge_list(int n, std::span<const EdgeSpec> edges) {
    SignedGraph g(n);
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge " + pair_str(e.u, e.v) + " out of range for n=" +
                                        std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("edge " + pair_str(e.u, e.v) + " has sign " +
                                        std::to_string(e.sign) + ", expected +-1");
        if (g.sign(e.u, e.v) != 0)
            throw std::invalid_argument("duplicate edge " + pair_str(e.u, e.v));
        g.a_[static_cast<std::size_t>(e.u) * n + e.v] = static_cast<std::int8_t>(e.sign);
        g.a_[static_cast<std::size_t>(e.v) * n + e.u] = static_cast<std::int8_t>(e.sign);
    }
    return g;
}

SignedGraph SignedGraph::from_edge_list(int n, std::initializer_list<EdgeSpec> edges) {
    return from_edge_list(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

SignedGraph SignedGraph::from_adjacency(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
    const int n = a.rows();
    SignedGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 0)
            throw std::invalid_argument("nonzero diagonal at vertex " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            const std::int64_t v = a(i, j);
            if (v < -1 || v > 1)
                throw std::invalid_argument("entry " + pair_str(i, j) + " = " + std::to_string(v) +
                                            " outside {-1,0,1}");
            if (v != a(j, i))
                throw std::invalid_argument("asymmetric entries at " + pair_str(i, j));
            g.a_[static_cast<std::size_t>(i) * n + j] = static_cast<std::int8_t>(v);
        }
    }
    return g;
}

SignedGraph SignedGraph::complete_positive(int n) {
    if (n < 1) throw std::invalid_argument("complete_positive requires n >= 1");
    SignedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.a_[static_cast<std::size_t>(i) * n + j] = 1;
    return g;
}

int SignedGraph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < n_; ++j)
        if (sign(v, j) != 0) ++d;
    return d;
}

std::size_t SignedGraph::edge_count() const {
    std::size_t m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (sign(u, v) != 0) ++m;
    return m;
}

std::vector<EdgeSpec> SignedGraph::edges() const {
    std::vector<EdgeSpec> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (int s = sign(u, v); s != 0) out.push_back({u, v, s});
    return out;
}

IntMatrix SignedGraph::adjacency() const {
    IntMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = sign(i, j);
    return m;
}

SignedGraph SignedGraph::negated() const {
    SignedGraph g(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) g.a_[i] = static_cast<std::int8_t>(-a_[i]);
    return g;
}

SignedGraph SignedGraph::switched(std::span<const int> s) const {
    std::vector<char> in(n_, 0);
    for (int v : s) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("switching set vertex " + std::to_string(v) +
                                        " out of range");
        in[v] = 1;
    }
    SignedGraph g = *this;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (in[u] != in[v]) g.a_[static_cast<std::size_t>(u) * n_ + v] =
                static_cast<std::int8_t>(-g.a_[static_cast<std::size_t>(u) * n_ + v]);
    return g;
}

std::optional<int> regularity(const SignedGraph& g) {
    if (g.order() == 0) return std::nullopt;
    const int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

int GroundPartition::balanced_count() const {
    int c = 0;
    for (bool b : balanced)
        if (b) ++c;
    return c;
}

GroundPartition balanced_components(const SignedGraph& g) {
    const int n = g.order();
    GroundPartition out;
    std::vector<int> potential(n, 0); // 0 = unvisited, else +-1
    for (int start = 0; start < n; ++start) {
        if (potential[start] != 0) continue;
        std::vector<int> comp;
        bool balanced = true;
        std::queue<int> q;
        potential[start] = 1;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v = 0; v < n; ++v) {
                int s = g.sign(u, v);
                if (s == 0) continue;
                int want = potential[u] * s;
                if (potential[v] == 0) {
                    potential[v] = want;
                    q.push(v);
                } else if (potential[v] != want) {
                    balanced = false;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
        out.balanced.push_back(balanced);
    }
    return out;
}

bool is_bipartite_ground(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> color(n, 0);
    for (int start = 0; start < n; ++start) {
        if (color[start] != 0) continue;
        color[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (g.sign(u, v) == 0) continue;
                if (color[v] == 0) {
                    color[v] = -color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected_ground(const SignedGraph& g) {
    return balanced_components(g).components.size() <= 1;
}

} // namespace twoeig
