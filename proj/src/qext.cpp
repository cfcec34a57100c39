#include "twoeig/qext.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace twoeig {

namespace {

// Pulls the largest square factor out: v = s^2 * f with f square-free.
std::pair<long, long> squarefree_split(long v) {
    long s = 1, f = 1;
    for (long p = 2; p * p <= v; ++p) {
        long e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        for (long i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) f *= p;
    }
    f *= v;
    return {s, f};
}

} // namespace

QExt::QExt(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ != 0) {
        if (d_ <= 1) throw std::invalid_argument("radicand must exceed 1");
        auto [s, f] = squarefree_split(d_);
        if (s != 1) throw std::invalid_argument("radicand must be square-free");
    }
    normalize();
}

QExt QExt::sqrt_of(long v) {
    if (v <= 0) throw std::invalid_argument("sqrt_of requires a positive argument");
    auto [s, f] = squarefree_split(v);
    if (f == 1) return QExt(static_cast<long>(s));
    return QExt(mpq_class(0), mpq_class(s), f);
}

void QExt::normalize() {
    if (b_ == 0) d_ = 0;
}

long QExt::merged_radicand(const QExt& l, const QExt& r) {
    if (l.d_ == 0) return r.d_;
    if (r.d_ == 0 || l.d_ == r.d_) return l.d_;
    throw std::invalid_argument("mixed radicands " + std::to_string(l.d_) + " and " +
                                std::to_string(r.d_));
}

QExt QExt::conjugate() const {
    QExt r = *this;
    r.b_ = -r.b_;
    return r;
}

QExt QExt::operator-() const {
    QExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QExt& QExt::operator+=(const QExt& o) {
    d_ = merged_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QExt& QExt::operator-=(const QExt& o) {
    d_ = merged_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QExt& QExt::operator*=(const QExt& o) {
    const long d = merged_radicand(*this, o);
    mpq_class na = a_ * o.a_;
    if (d != 0) na += mpq_class(d) * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

QExt& QExt::operator/=(const QExt& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    const long d = merged_radicand(*this, o);
    // 1/(a+b sqrt d) = (a-b sqrt d)/(a^2 - d b^2); the norm vanishes only at 0
    // because d is never a perfect square.
    mpq_class norm = o.a_ * o.a_;
    if (o.d_ != 0) norm -= mpq_class(o.d_) * o.b_ * o.b_;
    if (norm == 0) throw std::domain_error("division by zero norm");
    mpq_class na = (a_ * o.a_ - (d != 0 ? mpq_class(d) * b_ * o.b_ : mpq_class(0))) / norm;
    mpq_class nb = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

double QExt::to_double() const {
    double v = a_.get_d();
    if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string QExt::to_string() const {
    if (is_rational()) return a_.get_str();
    std::string out;
    if (a_ != 0) out += a_.get_str();
    if (b_ == 1) {
        if (!out.empty()) out += "+";
    } else if (b_ == -1) {
        out += "-";
    } else {
        if (!out.empty() && b_ > 0) out += "+";
        out += b_.get_str() + "*";
    }
    out += "sqrt(" + std::to_string(d_) + ")";
    return out;
}

std::optional<QMatrix> solve_exact(QMatrix a, QMatrix b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_exact needs a square matrix");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact shape mismatch");
    const QMatrix a0 = a;
    const QMatrix b0 = b;
    const int n = a.rows();
    const int r = b.cols();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            for (int j = 0; j < r; ++j) std::swap(b(pivot, j), b(col, j));
        }
        const QExt inv = QExt(1) / a(col, col);
        for (int j = col; j < n; ++j) a(col, j) *= inv;
        for (int j = 0; j < r; ++j) b(col, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const QExt f = a(i, col);
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            for (int j = 0; j < r; ++j) b(i, j) -= f * b(col, j);
        }
    }
    // exactness guard: the residual must vanish identically
    if (!(a0 * b - b0).is_zero()) throw std::logic_error("solve_exact residual is nonzero");
    return b;
}

bool is_invertible(QMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("is_invertible needs a square matrix");
    const int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
        const QExt inv = QExt(1) / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const QExt f = a(i, col) * inv;
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return true;
}

QMatrix to_qmatrix(const IntMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q(i, j) = QExt(static_cast<long>(m(i, j)));
    return q;
}

} // namespace twoeig
