#ifndef TWOEIG_QEXT_HPP
#define TWOEIG_QEXT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "twoeig/dense_matrix.hpp"

namespace twoeig {

// Exact scalar a + b*sqrt(d) with rational a, b and square-free d > 1.
// Rational values carry d == 0 (and b == 0); mixing two different radicands
// is rejected.  Arithmetic is exact throughout (GMP rationals underneath).
class QExt {
public:
    QExt() : a_(0), b_(0), d_(0) {}
    QExt(long v) : a_(v), b_(0), d_(0) {}
    QExt(const mpq_class& a) : a_(a), b_(0), d_(0) {}
    QExt(mpq_class a, mpq_class b, long d);

    // sqrt(v) with the square part pulled out: sqrt(20) -> 2*sqrt(5).
    static QExt sqrt_of(long v);

    const mpq_class& rational_part() const noexcept { return a_; }
    const mpq_class& radical_part() const noexcept { return b_; }
    long radicand() const noexcept { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return d_ == 0; }

    QExt conjugate() const;

    QExt operator-() const;
    QExt& operator+=(const QExt& o);
    QExt& operator-=(const QExt& o);
    QExt& operator*=(const QExt& o);
    QExt& operator/=(const QExt& o);

    friend QExt operator+(QExt l, const QExt& r) { return l += r; }
    friend QExt operator-(QExt l, const QExt& r) { return l -= r; }
    friend QExt operator*(QExt l, const QExt& r) { return l *= r; }
    friend QExt operator/(QExt l, const QExt& r) { return l /= r; }

    bool operator==(const QExt& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const QExt& o) const { return !(*this == o); }

    double to_double() const;
    std::string to_string() const;

private:
    void normalize();
    static long merged_radicand(const QExt& l, const QExt& r);

    mpq_class a_, b_;
    long d_;
};

using QMatrix = DenseMatrix<QExt>;

// Exact solution X of A X = B, or nullopt when A is singular.  The result is
// verified by back-substitution (residual must vanish identically).
std::optional<QMatrix> solve_exact(QMatrix a, QMatrix b);

bool is_invertible(QMatrix a);

QMatrix to_qmatrix(const IntMatrix& m);

} // namespace twoeig

#endif
