#include "twoeig/signed_matrix.hpp"

#include <stdexcept>
#include <string>

namespace twoeig {

namespace {

void check_entry(std::int64_t v, int i, int j) {
    if (v < -1 || v > 1)
        throw std::invalid_argument("signed matrix entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") = " + std::to_string(v) +
                                    " outside {-1,0,1}");
}

} // namespace

SignedMatrix::SignedMatrix(IntMatrix m) : m_(std::move(m)) {
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = 0; j < m_.cols(); ++j) check_entry(m_(i, j), i, j);
}

void SignedMatrix::set(int i, int j, std::int64_t v) {
    check_entry(v, i, j);
    m_(i, j) = v;
}

std::string SignedMatrix::to_text() const {
    std::string out;
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m_(i, j));
        }
        out += '\n';
    }
    return out;
}

SignedMatrix vstack(const SignedMatrix& top, const SignedMatrix& bottom) {
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack: column count mismatch");
    IntMatrix m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
    return SignedMatrix(std::move(m));
}

} // namespace twoeig
