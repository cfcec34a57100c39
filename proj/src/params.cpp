#include "twoeig/params.hpp"

#include <cmath>
#include <stdexcept>

#include "twoeig/spectra.hpp"

namespace twoeig {

namespace {

std::int64_t exact_isqrt(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v ? r : -1;
}

} // namespace

double TripleValue::to_double() const {
    if (is_integer()) return static_cast<double>(coeff);
    return static_cast<double>(coeff) * std::sqrt(static_cast<double>(radicand));
}

std::string TripleValue::to_string() const {
    if (is_integer()) return std::to_string(coeff);
    std::string prefix = coeff == 1 ? "" : coeff == -1 ? "-" : std::to_string(coeff) + "*";
    return prefix + "sqrt(" + std::to_string(radicand) + ")";
}

std::string to_string(TripleType t) {
    switch (t) {
        case TripleType::Type1: return "Type1";
        case TripleType::Type2: return "Type2";
        case TripleType::Type3: return "Type3";
        default: return "Other";
    }
}

std::string AdmissibleTriple::to_string() const {
    return "(" + std::to_string(t) + ", " + lambda1.to_string() + ", " + lambda2.to_string() + ")";
}

TripleType classify(std::int64_t k, std::int64_t t,
                    const TripleValue& lambda1, const TripleValue& lambda2) {
    if (t == 0) return TripleType::Type3;
    if (lambda1.is_integer() && lambda2.is_integer()) {
        // (n-2, n-1, -1) shape or its negation
        if (lambda2.coeff == -1 || lambda1.coeff == 1) return TripleType::Type1;
        // (k/2-2, k/2, -2) shape or its negation
        if (k % 2 == 0) {
            if (lambda2.coeff == -2 && lambda1.coeff == k / 2) return TripleType::Type2;
            if (lambda1.coeff == 2 && lambda2.coeff == -k / 2) return TripleType::Type2;
        }
    }
    return TripleType::Other;
}

std::vector<AdmissibleTriple> admissible_triples(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("admissible_triples requires k >= 1");
    std::vector<AdmissibleTriple> out;
    for (std::int64_t t = k - 1; t >= -k + 1; --t) {
        const std::int64_t b = t * t + 4 * k;
        AdmissibleTriple tr;
        tr.k = k;
        tr.t = t;
        tr.b = b;
        if (t == 0) {
            const std::int64_t s = exact_isqrt(k);
            if (s >= 0) {
                tr.lambda1 = {s, 0};
                tr.lambda2 = {-s, 0};
            } else {
                tr.lambda1 = {1, k};
                tr.lambda2 = {-1, k};
            }
        } else {
            const std::int64_t s = exact_isqrt(b);
            if (s < 0) continue;
            tr.lambda1 = {(t + s) / 2, 0};
            tr.lambda2 = {(t - s) / 2, 0};
        }
        tr.type = classify(k, t, tr.lambda1, tr.lambda2);
        out.push_back(tr);
    }
    return out;
}

std::vector<std::int64_t> feasible_orders(const AdmissibleTriple& triple, std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("feasible_orders requires n_max >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= n_max; ++n)
        if (exact_multiplicities(triple.t, triple.k, n)) out.push_back(n);
    return out;
}

std::map<std::int64_t, std::vector<AdmissibleTriple>> table1() {
    std::map<std::int64_t, std::vector<AdmissibleTriple>> rows;
    for (std::int64_t k = 5; k <= 10; ++k) rows[k] = admissible_triples(k);
    return rows;
}

} // namespace twoeig
