#include "twoeig/starcomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twoeig {

namespace {

struct Blocks {
    QMatrix ax; // |X| x |X|
    QMatrix ay; // |Y| x |Y|
    QMatrix b;  // |X| x |Y|
};

std::vector<int> sorted_checked(const SignedGraph& g, std::span<const int> x) {
    std::vector<int> s(x.begin(), x.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            throw std::invalid_argument("vertex " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i] == s[i - 1])
            throw std::invalid_argument("repeated vertex " + std::to_string(s[i]));
    }
    return s;
}

Blocks extract_blocks(const SignedGraph& g, const std::vector<int>& x,
                      const std::vector<int>& y) {
    Blocks out{QMatrix(static_cast<int>(x.size()), static_cast<int>(x.size())),
               QMatrix(static_cast<int>(y.size()), static_cast<int>(y.size())),
               QMatrix(static_cast<int>(x.size()), static_cast<int>(y.size()))};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            out.ax(static_cast<int>(i), static_cast<int>(j)) = QExt(g.sign(x[i], x[j]));
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out.ay(static_cast<int>(i), static_cast<int>(j)) = QExt(g.sign(y[i], y[j]));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out.b(static_cast<int>(i), static_cast<int>(j)) = QExt(g.sign(x[i], y[j]));
    return out;
}

QMatrix shifted(const QMatrix& m, const QExt& mu) {
    QMatrix out = -m;
    for (int i = 0; i < m.rows(); ++i) out(i, i) += mu;
    return out; // mu*I - M
}

std::vector<int> complement_of(const SignedGraph& g, const std::vector<int>& x) {
    std::vector<char> in(g.order(), 0);
    for (int v : x) in[v] = 1;
    std::vector<int> y;
    for (int v = 0; v < g.order(); ++v)
        if (!in[v]) y.push_back(v);
    return y;
}

} // namespace

StarSetCheck is_star_set(const SignedGraph& g, std::span<const int> x, const QExt& mu) {
    const std::vector<int> xs = sorted_checked(g, x);
    if (xs.empty() || static_cast<int>(xs.size()) >= g.order())
        throw std::invalid_argument("star set must be a nonempty proper vertex subset");
    const std::vector<int> ys = complement_of(g, xs);
    const Blocks blk = extract_blocks(g, xs, ys);

    StarSetCheck out;
    // solve (mu I - C) Z = B^t instead of forming the inverse
    auto z = solve_exact(shifted(blk.ay, mu), blk.b.transposed());
    if (!z) {
        out.mu_in_complement = true;
        return out;
    }
    out.pass = shifted(blk.ax, mu) == blk.b * *z;
    return out;
}

PartitionCheck verify_partition(const SignedGraph& g, std::span<const int> x,
                                std::span<const int> y, const QExt& l1, const QExt& l2) {
    const std::vector<int> xs = sorted_checked(g, x);
    const std::vector<int> ys = sorted_checked(g, y);
    {
        std::vector<int> all;
        all.reserve(xs.size() + ys.size());
        all.insert(all.end(), xs.begin(), xs.end());
        all.insert(all.end(), ys.begin(), ys.end());
        std::sort(all.begin(), all.end());
        for (int v = 0; v < g.order(); ++v)
            if (v >= static_cast<int>(all.size()) || all[v] != v)
                throw std::invalid_argument("X and Y must partition the vertex set");
        if (static_cast<int>(all.size()) != g.order())
            throw std::invalid_argument("X and Y must partition the vertex set");
    }
    if (xs.empty() || ys.empty())
        throw std::invalid_argument("both partition classes must be nonempty");

    const Blocks blk = extract_blocks(g, xs, ys);
    PartitionCheck out;

    auto z1 = solve_exact(shifted(blk.ay, l1), blk.b.transposed());
    if (!z1) {
        out.detail = "lambda1 is an eigenvalue of the Y block";
        return out;
    }
    if (!(shifted(blk.ax, l1) == blk.b * *z1)) {
        out.detail = "identity for lambda1 fails";
        return out;
    }

    auto z2 = solve_exact(shifted(blk.ax, l2), blk.b);
    if (!z2) {
        out.detail = "lambda2 is an eigenvalue of the X block";
        return out;
    }
    if (!(shifted(blk.ay, l2) == blk.b.transposed() * *z2)) {
        out.detail = "identity for lambda2 fails";
        return out;
    }

    out.pass = true;
    return out;
}

std::optional<std::vector<int>> find_star_set(const SignedGraph& g, const QExt& mu, int size) {
    const int n = g.order();
    if (size < 1 || size >= n)
        throw std::invalid_argument("star set size must lie strictly between 0 and n");

    // lexicographic combinations; the first workable subset wins
    std::vector<int> x(size);
    for (int i = 0; i < size; ++i) x[i] = i;
    while (true) {
        const std::vector<int> y = complement_of(g, x);
        QMatrix c(n - size, n - size);
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                c(static_cast<int>(i), static_cast<int>(j)) = QExt(g.sign(y[i], y[j]));
        for (int i = 0; i < n - size; ++i) c(i, i) -= mu;
        if (is_invertible(std::move(c)) && is_star_set(g, x, mu).pass) return x;

        // advance the combination odometer
        int pos = size - 1;
        while (pos >= 0 && x[pos] == n - size + pos) --pos;
        if (pos < 0) return std::nullopt;
        ++x[pos];
        for (int i = pos + 1; i < size; ++i) x[i] = x[i - 1] + 1;
    }
}

} // namespace twoeig
