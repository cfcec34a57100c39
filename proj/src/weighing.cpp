#include "twoeig/weighing.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "twoeig/spectra.hpp"

namespace twoeig {

PatternMatrix::PatternMatrix(int half, std::vector<std::uint8_t> cells)
    : half_(half), cells_(std::move(cells)) {
    if (half_ < 1 || cells_.size() != static_cast<std::size_t>(half_) * half_)
        throw std::invalid_argument("pattern cell count does not match its order");
    for (int i = 0; i < half_; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < half_; ++j) {
            row += at(i, j) ? 1 : 0;
            col += at(j, i) ? 1 : 0;
        }
        if (row != 2 || col != 2)
            throw std::invalid_argument("pattern row/column " + std::to_string(i) +
                                        " does not hold exactly two ones");
    }
}

std::vector<int> PatternMatrix::column_rows(int j) const {
    std::vector<int> rows;
    for (int i = 0; i < half_; ++i)
        if (at(i, j)) rows.push_back(i);
    return rows;
}

namespace {

PatternMatrix circulant_pattern(int m, int r0, int r1, const char* name) {
    if (m < 8 || m % 2 != 0)
        throw std::invalid_argument(std::string(name) + " requires even order m >= 8, got m=" +
                                    std::to_string(m));
    const int h = m / 2;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(h) * h, 0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            const int d = ((j - i) % h + h) % h;
            if (d == ((r0 % h + h) % h) || d == ((r1 % h + h) % h))
                cells[static_cast<std::size_t>(i) * h + j] = 1;
        }
    return PatternMatrix(h, std::move(cells));
}

} // namespace

PatternMatrix pattern_x(int m, bool stated_residues) {
    // default residues {0, -1} match the worked matrices; {0, +1} is the
    // stated rule, which overlaps pattern_y and only exists for comparison
    return stated_residues ? circulant_pattern(m, 0, 1, "pattern_x")
                           : circulant_pattern(m, 0, -1, "pattern_x");
}

PatternMatrix pattern_y(int m) { return circulant_pattern(m, 1, m / 2 - 2, "pattern_y"); }

SignedMatrix f_block(const PatternMatrix& p) {
    const int h = p.half();
    IntMatrix f(h, 2 * h);
    for (int j = 0; j < h; ++j) {
        const auto rows = p.column_rows(j);
        if (rows.size() != 2)
            throw std::invalid_argument("pattern column " + std::to_string(j) +
                                        " does not hold exactly two ones");
        f(rows[0], 2 * j) = 1;
        f(rows[0], 2 * j + 1) = 1;
        f(rows[1], 2 * j) = 1;
        f(rows[1], 2 * j + 1) = -1;
    }
    return SignedMatrix(std::move(f));
}

SignedMatrix r_block(const SignedMatrix& f) {
    IntMatrix r(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i) {
        std::vector<int> nz;
        for (int j = 0; j < f.cols(); ++j)
            if (f(i, j) != 0) nz.push_back(j);
        if (nz.size() != 4)
            throw std::invalid_argument("row " + std::to_string(i) + " holds " +
                                        std::to_string(nz.size()) + " nonzeros, expected 4");
        r(i, nz[0]) = f(i, nz[0]);
        r(i, nz[1]) = f(i, nz[1]);
        r(i, nz[2]) = -f(i, nz[2]);
        r(i, nz[3]) = -f(i, nz[3]);
    }
    return SignedMatrix(std::move(r));
}

SignedMatrix build_weighing(const PatternMatrix& p) {
    const SignedMatrix f = f_block(p);
    return vstack(f, r_block(f));
}

std::optional<IntMatrix> semi_orthogonal_half(const SignedMatrix& w1, const SignedMatrix& w2) {
    if (w1.rows() != w2.rows() || w1.cols() != w2.cols())
        throw std::invalid_argument("semi_orthogonal_half: order mismatch");
    const IntMatrix prod = w1.matrix().transposed() * w2.matrix();
    IntMatrix half(prod.rows(), prod.cols());
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) {
            const std::int64_t v = prod(i, j);
            if (v != 0 && v != 2 && v != -2) return std::nullopt;
            half(i, j) = v / 2;
        }
    return half;
}

SignedGraph assemble_block(const SignedMatrix& w1, const SignedMatrix& w2) {
    const int m = w1.rows();
    auto half = semi_orthogonal_half(w1, w2);
    if (!half) {
        const IntMatrix prod = w1.matrix().transposed() * w2.matrix();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (const auto v = prod(i, j); v != 0 && v != 2 && v != -2)
                    throw std::invalid_argument(
                        "pair is not semi-orthogonal: entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") of W1^t W2 is " + std::to_string(v) +
                        ", outside {0,+-2}");
        throw std::logic_error("unreachable");
    }
    const IntMatrix& p = *half;
    const IntMatrix pt = p.transposed();
    IntMatrix a(3 * m, 3 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            a(i, m + j) = w1(i, j);
            a(m + j, i) = w1(i, j);
            a(i, 2 * m + j) = w2(i, j);
            a(2 * m + j, i) = w2(i, j);
            a(m + i, 2 * m + j) = p(i, j);
            a(2 * m + j, m + i) = p(i, j);
        }
    }
    return SignedGraph::from_adjacency(a);
}

namespace {

using Row4 = std::array<int, 4>;

// The 16 sign patterns of a +-1 row, all-plus first, then lexicographic.
std::vector<Row4> all_rows4() {
    std::vector<Row4> rows;
    for (int mask = 0; mask < 16; ++mask) {
        Row4 r;
        for (int j = 0; j < 4; ++j) r[j] = (mask >> (3 - j)) & 1 ? -1 : 1;
        rows.push_back(r);
    }
    return rows;
}

int dot(const Row4& a, const Row4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

std::vector<std::array<Row4, 4>> all_hadamard4() {
    const auto rows = all_rows4();
    std::vector<std::array<Row4, 4>> out;
    std::array<Row4, 4> cur{};
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == 4) {
            out.push_back(cur);
            return;
        }
        for (const auto& r : rows) {
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) ok = dot(cur[i], r) == 0;
            if (!ok) continue;
            cur[depth] = r;
            self(self, depth + 1);
        }
    };
    extend(extend, 0);
    return out;
}

SignedMatrix to_signed(const std::array<Row4, 4>& h) {
    IntMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = h[i][j];
    return SignedMatrix(std::move(m));
}

} // namespace

std::vector<WeighingPair> search_order4_pairs(std::optional<std::uint64_t> budget) {
    const auto hadamards = all_hadamard4();

    std::vector<std::array<Row4, 4>> normalized;
    for (const auto& h : hadamards) {
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) ok = h[0][j] == 1;
        for (int i = 0; i < 4 && ok; ++i) ok = h[i][0] == 1;
        if (ok) normalized.push_back(h);
    }

    std::vector<WeighingPair> found;
    std::uint64_t examined = 0;
    for (const auto& h1 : normalized) {
        for (const auto& h2 : hadamards) {
            if (budget && examined >= *budget) return found;
            ++examined;
            const SignedMatrix w1 = to_signed(h1);
            const SignedMatrix w2 = to_signed(h2);
            if (auto half = semi_orthogonal_half(w1, w2))
                found.push_back({w1, w2, std::move(*half)});
        }
    }
    // enumeration is already lexicographic, so the order is canonical
    return found;
}

SignedMatrix kronecker(const SignedMatrix& a, const SignedMatrix& b) {
    const auto wa = weighing_weight(a);
    const auto wb = weighing_weight(b);
    if (!wa || !wb) throw std::invalid_argument("kronecker requires two weighing matrices");
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return SignedMatrix(std::move(out));
}

} // namespace twoeig
