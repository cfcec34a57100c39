#ifndef TWOEIG_SPECTRA_HPP
#define TWOEIG_SPECTRA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twoeig/qext.hpp"
#include "twoeig/signed_graph.hpp"
#include "twoeig/signed_matrix.hpp"
#include "twoeig/tolerances.hpp"

namespace twoeig {

// Exact two-eigenvalue spectrum [lambda1^m1, lambda2^m2] with
// lambda_{1,2} = (t +- sqrt(b)) / 2 and b = t^2 + 4k.  Eigenvalues are kept
// symbolically as the pair (t, b); they are integers iff b is a perfect
// square (always the case when t != 0).
struct ExactSpectrum {
    std::int64_t t = 0;
    std::int64_t k = 0;
    std::int64_t b = 0;
    int n = 0;
    int m1 = 0;
    int m2 = 0;

    bool integral() const;
    std::int64_t sqrt_b() const; // valid only when integral()
    double lambda1() const;
    double lambda2() const;
    QExt lambda1_exact() const;
    QExt lambda2_exact() const;
    std::string to_string() const; // e.g. "[3^4, (-2)^6]" or "[sqrt(5)^3, (-sqrt(5))^3]"
};

// Decides in integer arithmetic whether the graph has exactly two distinct
// adjacency eigenvalues: requires regularity, then checks
// A^2 - t A - k I = 0 entrywise with t recovered from the first edge.
std::optional<ExactSpectrum> two_eigenvalue_spectrum(const SignedGraph& g);

// Constant signed 2-path counts of a regular signed graph:
// t over edges, rho over non-adjacent pairs, i.e. the constants making
// A^2 - t A - k I = rho * Abar hold entrywise (Abar = ground complement).
struct TwoPathParams {
    std::int64_t k = 0;
    std::optional<std::int64_t> t;   // absent iff the graph has no edges
    std::optional<std::int64_t> rho; // 0 with complete_ground set when no non-edges exist
    bool complete_ground = false;
};

std::optional<TwoPathParams> two_path_params(const SignedGraph& g);

bool is_weighing(const SignedMatrix& m, std::int64_t alpha);
// alpha such that M M^t = M^t M = alpha I, if any (alpha > 0).
std::optional<std::int64_t> weighing_weight(const SignedMatrix& m);

// Cyclic Jacobi eigensolver for symmetric integer matrices; ascending order.
// Deterministic sweep order; rejects non-symmetric input.
std::vector<double> jacobi_eigenvalues(const IntMatrix& m,
                                       double offdiag_tol = Tolerances{}.jacobi_offdiag);

struct Eigensystem {
    int n = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major n x n, column j pairs with values[j]
};

Eigensystem jacobi_eigensystem(const IntMatrix& m,
                               double offdiag_tol = Tolerances{}.jacobi_offdiag);

// Number of clusters when consecutive sorted values within cluster_tol merge.
int distinct_eigenvalue_count(std::span<const double> sorted_values, double cluster_tol);

struct RamanujanReport {
    int k = 0;
    double lambda_max = 0.0;
    double bound = 0.0; // 2*sqrt(k-1)
    bool pass = false;
};

// Checks lambda_max <= 2*sqrt(k-1) + slack; requires a k-regular graph, k >= 2.
RamanujanReport ramanujan_check(const SignedGraph& g, const Tolerances& tol = {});

// Multiplicities (m1, m2) forced by trace zero for eigenvalues
// (t +- sqrt(t^2+4k))/2 on n vertices, or nullopt when they are not
// positive integers (no such spectrum exists on n vertices).
std::optional<std::pair<std::int64_t, std::int64_t>>
exact_multiplicities(std::int64_t t, std::int64_t k, std::int64_t n);

} // namespace twoeig

#endif
