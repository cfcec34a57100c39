#include "twoeig/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twoeig {

namespace {

// Exact integer square root, or -1 when v is not a perfect square.
std::int64_t exact_isqrt(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v ? r : -1;
}

} // namespace

bool ExactSpectrum::integral() const { return exact_isqrt(b) >= 0; }

std::int64_t ExactSpectrum::sqrt_b() const {
    const std::int64_t s = exact_isqrt(b);
    if (s < 0) throw std::logic_error("sqrt_b on an irrational spectrum");
    return s;
}

double ExactSpectrum::lambda1() const {
    return (static_cast<double>(t) + std::sqrt(static_cast<double>(b))) / 2.0;
}

double ExactSpectrum::lambda2() const {
    return (static_cast<double>(t) - std::sqrt(static_cast<double>(b))) / 2.0;
}

QExt ExactSpectrum::lambda1_exact() const {
    return (QExt(static_cast<long>(t)) + QExt::sqrt_of(b)) / QExt(2);
}

QExt ExactSpectrum::lambda2_exact() const {
    return (QExt(static_cast<long>(t)) - QExt::sqrt_of(b)) / QExt(2);
}

std::string ExactSpectrum::to_string() const {
    auto part = [](const std::string& v, int m) { return v + "^" + std::to_string(m); };
    if (integral()) {
        const std::int64_t s = sqrt_b();
        const std::int64_t l1 = (t + s) / 2;
        const std::int64_t l2 = (t - s) / 2;
        auto fmt = [](std::int64_t v) {
            return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v);
        };
        return "[" + part(fmt(l1), m1) + ", " + part(fmt(l2), m2) + "]";
    }
    // irrational only when t = 0, where the eigenvalues are +-sqrt(k)
    const std::string root = "sqrt(" + std::to_string(k) + ")";
    return "[" + part(root, m1) + ", " + part("(-" + root + ")", m2) + "]";
}

std::optional<ExactSpectrum> two_eigenvalue_spectrum(const SignedGraph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    const auto reg = regularity(g);
    if (!reg || *reg < 1) return std::nullopt;
    const std::int64_t k = *reg;

    const IntMatrix a = g.adjacency();
    const IntMatrix sq = a * a;

    // recover t from the first edge: (A^2)_uv = t * A_uv with A_uv = +-1
    std::int64_t t = 0;
    bool found = false;
    for (int u = 0; u < n && !found; ++u) {
        for (int v = u + 1; v < n && !found; ++v) {
            if (a(u, v) != 0) {
                t = sq(u, v) * a(u, v);
                found = true;
            }
        }
    }
    if (!found) return std::nullopt;

    // A^2 - tA - kI must vanish entrywise
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sq(i, j) - t * a(i, j) - (i == j ? k : 0) != 0) return std::nullopt;

    const std::int64_t b = t * t + 4 * k;
    ExactSpectrum out{t, k, b, n, 0, 0};
    if (t == 0) {
        if (n % 2 != 0) return std::nullopt; // cannot happen once A^2 = kI holds
        out.m1 = out.m2 = n / 2;
        return out;
    }
    const std::int64_t s = exact_isqrt(b);
    if (s < 0) return std::nullopt; // likewise unreachable for a genuine STE
    const std::int64_t num = static_cast<std::int64_t>(n) * (s - t);
    if (num % (2 * s) != 0) return std::nullopt;
    out.m1 = static_cast<int>(num / (2 * s));
    out.m2 = n - out.m1;
    return out;
}

std::optional<TwoPathParams> two_path_params(const SignedGraph& g) {
    const auto reg = regularity(g);
    if (!reg) return std::nullopt;
    const int n = g.order();
    const IntMatrix a = g.adjacency();
    const IntMatrix sq = a * a;

    TwoPathParams out;
    out.k = *reg;
    bool have_nonedge = false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (a(u, v) != 0) {
                const std::int64_t c = sq(u, v) * a(u, v);
                if (!out.t)
                    out.t = c;
                else if (*out.t != c)
                    return std::nullopt;
            } else {
                const std::int64_t c = sq(u, v);
                have_nonedge = true;
                if (!out.rho)
                    out.rho = c;
                else if (*out.rho != c)
                    return std::nullopt;
            }
        }
    }
    if (!have_nonedge) {
        out.complete_ground = true;
        out.rho = 0; // vacuous: no non-edges to constrain
    }
    return out;
}

bool is_weighing(const SignedMatrix& m, std::int64_t alpha) {
    if (m.rows() != m.cols()) return false;
    const IntMatrix scaled = IntMatrix::identity(m.rows()).scaled(alpha);
    const IntMatrix mt = m.matrix().transposed();
    return m.matrix() * mt == scaled && mt * m.matrix() == scaled;
}

std::optional<std::int64_t> weighing_weight(const SignedMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
    std::int64_t alpha = 0;
    for (int j = 0; j < m.cols(); ++j) alpha += m(0, j) * m(0, j);
    if (alpha <= 0) return std::nullopt;
    return is_weighing(m, alpha) ? std::optional(alpha) : std::nullopt;
}

namespace {

struct JacobiState {
    int n;
    std::vector<double> a;       // row-major symmetric working copy
    std::vector<double> v;       // accumulated rotations, or empty
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

double max_offdiag(JacobiState& s) {
    double m = 0.0;
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) m = std::max(m, std::abs(s.at(i, j)));
    return m;
}

void rotate(JacobiState& s, int p, int q) {
    const double apq = s.at(p, q);
    const double h = s.at(q, q) - s.at(p, p);
    double t;
    if (std::abs(h) + 100.0 * std::abs(apq) == std::abs(h)) {
        t = apq / h; // small-angle regime
    } else {
        const double theta = 0.5 * h / apq;
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double sn = t * c;
    const double tau = sn / (1.0 + c);
    const double app = s.at(p, p), aqq = s.at(q, q);

    s.at(p, p) = app - t * apq;
    s.at(q, q) = aqq + t * apq;
    s.at(p, q) = 0.0;
    s.at(q, p) = 0.0;
    for (int i = 0; i < s.n; ++i) {
        if (i == p || i == q) continue;
        const double aip = s.at(i, p), aiq = s.at(i, q);
        const double nip = aip - sn * (aiq + tau * aip);
        const double niq = aiq + sn * (aip - tau * aiq);
        s.at(i, p) = nip;
        s.at(p, i) = nip;
        s.at(i, q) = niq;
        s.at(q, i) = niq;
    }
    if (!s.v.empty()) {
        for (int i = 0; i < s.n; ++i) {
            double& vip = s.v[static_cast<std::size_t>(i) * s.n + p];
            double& viq = s.v[static_cast<std::size_t>(i) * s.n + q];
            const double nip = vip - sn * (viq + tau * vip);
            const double niq = viq + sn * (vip - tau * viq);
            vip = nip;
            viq = niq;
        }
    }
}

JacobiState run_jacobi(const IntMatrix& m, double tol, bool want_vectors) {
    if (!m.is_symmetric()) throw std::invalid_argument("jacobi: matrix is not symmetric");
    const int n = m.rows();
    JacobiState s{n, std::vector<double>(static_cast<std::size_t>(n) * n), {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.at(i, j) = static_cast<double>(m(i, j));
    if (want_vectors) {
        s.v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) s.v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    if (n < 2) return s;

    // Each sweep only rotates entries within a factor of the current largest
    // off-diagonal.  Plain cyclic sweeps stall on matrices with large
    // eigenvalue clusters (45-degree intra-cluster rotations keep shuffling
    // the small entries around); annealing the threshold restores fast
    // convergence and costs one O(n^2) scan per sweep.
    constexpr int max_sweeps = 300;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = max_offdiag(s);
        if (off < tol) return s;
        const double thresh = 0.2 * off;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(s.at(p, q)) >= thresh && s.at(p, q) != 0.0) rotate(s, p, q);
    }
    if (max_offdiag(s) >= tol) throw std::runtime_error("jacobi: failed to converge");
    return s;
}

} // namespace

std::vector<double> jacobi_eigenvalues(const IntMatrix& m, double offdiag_tol) {
    JacobiState s = run_jacobi(m, offdiag_tol, false);
    std::vector<double> vals(m.rows());
    for (int i = 0; i < m.rows(); ++i) vals[i] = s.at(i, i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

Eigensystem jacobi_eigensystem(const IntMatrix& m, double offdiag_tol) {
    JacobiState s = run_jacobi(m, offdiag_tol, true);
    const int n = m.rows();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.at(a, a) < s.at(b, b); });
    Eigensystem out;
    out.n = n;
    out.values.resize(n);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = s.at(order[j], order[j]);
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + j] =
                s.v[static_cast<std::size_t>(i) * n + order[j]];
    }
    return out;
}

int distinct_eigenvalue_count(std::span<const double> sorted_values, double cluster_tol) {
    if (sorted_values.empty()) return 0;
    int count = 1;
    for (std::size_t i = 1; i < sorted_values.size(); ++i)
        if (sorted_values[i] - sorted_values[i - 1] > cluster_tol) ++count;
    return count;
}

RamanujanReport ramanujan_check(const SignedGraph& g, const Tolerances& tol) {
    const auto reg = regularity(g);
    if (!reg) throw std::invalid_argument("ramanujan_check requires a regular graph");
    if (*reg < 2) throw std::invalid_argument("ramanujan_check requires valency k >= 2");
    RamanujanReport r;
    r.k = *reg;
    const auto vals = jacobi_eigenvalues(g.adjacency(), tol.jacobi_offdiag);
    r.lambda_max = vals.back();
    r.bound = 2.0 * std::sqrt(static_cast<double>(r.k - 1));
    r.pass = r.lambda_max <= r.bound + tol.ramanujan_slack;
    return r;
}

std::optional<std::pair<std::int64_t, std::int64_t>>
exact_multiplicities(std::int64_t t, std::int64_t k, std::int64_t n) {
    if (k < 1 || n < 1) return std::nullopt;
    if (t == 0) {
        if (n % 2 != 0) return std::nullopt;
        return std::pair{n / 2, n / 2};
    }
    const std::int64_t s = exact_isqrt(t * t + 4 * k);
    if (s < 0) return std::nullopt;
    // trace zero: m1*(t+s)/2 + m2*(t-s)/2 = 0 with m1+m2 = n
    const std::int64_t num = n * (s - t);
    if (num % (2 * s) != 0) return std::nullopt;
    const std::int64_t m1 = num / (2 * s);
    const std::int64_t m2 = n - m1;
    if (m1 < 1 || m2 < 1) return std::nullopt;
    return std::pair{m1, m2};
}

} // namespace twoeig
