#ifndef TWOEIG_TOLERANCES_HPP
#define TWOEIG_TOLERANCES_HPP

namespace twoeig {

// Every floating-point threshold used anywhere in the project, in one place.
// Exact (integer / quadratic-field) checks never consult these.
struct Tolerances {
    double jacobi_offdiag = 1e-12;  // eigensolver convergence
    double compare = 1e-8;          // eigenvalue list comparisons
    double cluster = 1e-6;          // grouping floats into distinct eigenvalues
    double ramanujan_slack = 1e-9;  // slack on lambda_max <= 2*sqrt(k-1)
};

} // namespace twoeig

#endif
