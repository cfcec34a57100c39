#ifndef TWOEIG_PARAMS_HPP
#define TWOEIG_PARAMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twoeig {

// Exact eigenvalue of an admissible triple: an integer, or c*sqrt(r) with
// r the (non-square) valency.  Printed unreduced, e.g. "sqrt(8)".
struct TripleValue {
    std::int64_t coeff = 0;    // the integer itself when radicand == 0
    std::int64_t radicand = 0; // 0 for plain integers

    bool is_integer() const { return radicand == 0; }
    double to_double() const;
    std::string to_string() const;
    bool operator==(const TripleValue&) const = default;
};

enum class TripleType { Type1, Type2, Type3, Other };

std::string to_string(TripleType t);

// Admissible parameter triple (t, lambda1, lambda2) for a k-regular graph
// with two distinct eigenvalues: lambda1*lambda2 = -k, lambda1+lambda2 = t,
// and t = 0 or t^2+4k a perfect square; always normalized to lambda1 > lambda2.
struct AdmissibleTriple {
    std::int64_t k = 0;
    std::int64_t t = 0;
    TripleValue lambda1;
    TripleValue lambda2;
    std::int64_t b = 0; // t^2 + 4k
    TripleType type = TripleType::Other;

    bool operator==(const AdmissibleTriple&) const = default;
    std::string to_string() const; // "(t, l1, l2)"
};

// All admissible triples for valency k, sorted by descending t.
std::vector<AdmissibleTriple> admissible_triples(std::int64_t k);

TripleType classify(std::int64_t k, std::int64_t t,
                    const TripleValue& lambda1, const TripleValue& lambda2);

// Vertex counts n <= n_max on which the triple admits positive integer
// multiplicities (pure integrality; no graph-existence claim).
std::vector<std::int64_t> feasible_orders(const AdmissibleTriple& triple, std::int64_t n_max);

// Rows k = 5..10 of the admissible-parameter table.
std::map<std::int64_t, std::vector<AdmissibleTriple>> table1();

} // namespace twoeig

#endif
