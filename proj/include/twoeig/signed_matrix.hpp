#ifndef TWOEIG_SIGNED_MATRIX_HPP
#define TWOEIG_SIGNED_MATRIX_HPP

#include <cstdint>
#include <string>

#include "twoeig/dense_matrix.hpp"

namespace twoeig {

// Rectangular matrix restricted to entries {-1, 0, +1}; the entry domain is
// checked once at construction.  Weighing matrices, incidence matrices and
// block pieces all live here.
class SignedMatrix {
public:
    explicit SignedMatrix(IntMatrix m);
    SignedMatrix(int rows, int cols) : m_(rows, cols) {}

    int rows() const noexcept { return m_.rows(); }
    int cols() const noexcept { return m_.cols(); }
    std::int64_t operator()(int i, int j) const { return m_(i, j); }

    const IntMatrix& matrix() const noexcept { return m_; }
    SignedMatrix transposed() const { return SignedMatrix(m_.transposed()); }

    bool operator==(const SignedMatrix&) const = default;

    // Sets a single entry, revalidating the domain.
    void set(int i, int j, std::int64_t v);

    std::string to_text() const; // rows of space-separated -1/0/1

private:
    IntMatrix m_;
};

// Vertical stack [top; bottom]; column counts must agree.
SignedMatrix vstack(const SignedMatrix& top, const SignedMatrix& bottom);

} // namespace twoeig

#endif
