#ifndef TWOEIG_WEIGHING_HPP
#define TWOEIG_WEIGHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "twoeig/dense_matrix.hpp"
#include "twoeig/signed_graph.hpp"
#include "twoeig/signed_matrix.hpp"

namespace twoeig {

// Circulant 0/1 pattern of order m/2 with exactly two ones per row and
// column; the seed both weight-4 weighing matrices grow from.
class PatternMatrix {
public:
    PatternMatrix(int half, std::vector<std::uint8_t> cells);

    int half() const noexcept { return half_; }
    bool at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * half_ + j] != 0; }

    // Rows i (0-based) holding a one in column j.
    std::vector<int> column_rows(int j) const;

    bool operator==(const PatternMatrix&) const = default;

private:
    int half_;
    std::vector<std::uint8_t> cells_;
};

// X pattern: ones on residues {0, -1} mod m/2 (matching the worked order-7
// matrices; the alternative {0, +1} rule collides with Y and is only exposed
// for comparison via stated_residues).  Requires even m >= 8.
PatternMatrix pattern_x(int m, bool stated_residues = false);

// Y pattern: ones on residues {1, m/2 - 2} mod m/2.  Requires even m >= 8;
// at m = 6 the two residues coincide and the pattern degenerates.
PatternMatrix pattern_y(int m);

// Expands each pattern column j into column pair (2j, 2j+1): the upper one
// becomes [1, 1], the lower one [1, -1], zeros stay [0, 0].
SignedMatrix f_block(const PatternMatrix& p);

// Copies the two leftmost nonzeros of each row and negates the two
// rightmost (plain column order, including wrapped rows).
SignedMatrix r_block(const SignedMatrix& f);

// The order-m weight-4 weighing matrix [F; R] grown from a pattern.
SignedMatrix build_weighing(const PatternMatrix& p);

// (1/2) W1^t W2 when every entry of W1^t W2 lies in {0, +-2} (the pair is
// then called semi-orthogonal); nullopt otherwise.
std::optional<IntMatrix> semi_orthogonal_half(const SignedMatrix& w1, const SignedMatrix& w2);

// 8-regular graph on 3m vertices from a semi-orthogonal weight-4 pair:
//   [ O    W1        W2      ]
//   [ W1^t O         P       ]   with P = (1/2) W1^t W2
//   [ W2^t P^t       O       ]
// Requires P to have {0,+-1} entries; explains the first offending entry
// otherwise.
SignedGraph assemble_block(const SignedMatrix& w1, const SignedMatrix& w2);

struct WeighingPair {
    SignedMatrix w1;
    SignedMatrix w2;
    IntMatrix half_product; // (1/2) W1^t W2
};

// Exhaustive deterministic search over order-4 dense +-1 weighing matrices
// (W1 normalized: first row and first column all +1; W2 unrestricted),
// keeping pairs whose product condition admits an 8-regular block graph.
// budget caps the number of candidate pairs examined; nullopt = no cap.
std::vector<WeighingPair> search_order4_pairs(std::optional<std::uint64_t> budget = std::nullopt);

// Kronecker product of two weighing matrices: weight alpha*beta, order m*n.
SignedMatrix kronecker(const SignedMatrix& a, const SignedMatrix& b);

} // namespace twoeig

#endif
