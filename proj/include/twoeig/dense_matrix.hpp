#ifndef TWOEIG_DENSE_MATRIX_HPP
#define TWOEIG_DENSE_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twoeig {

// Row-major dense matrix over any ring-like value type (int64, QExt, ...).
// All instances in this project are small (n <= ~1024), so no blocking.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(int rows, int cols, T init = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, init) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const DenseMatrix&) const = default;

    DenseMatrix transposed() const {
        DenseMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        DenseMatrix r(rows_, o.cols_);
        // ikj order keeps the inner loop contiguous in both operands
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        }
        return r;
    }

    DenseMatrix operator+(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    DenseMatrix operator-() const {
        DenseMatrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    DenseMatrix scaled(const T& s) const {
        DenseMatrix r = *this;
        for (auto& v : r.data_) v = v * s;
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T{})) return false;
        return true;
    }

    T trace() const {
        T s{};
        for (int i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

private:
    void check_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;

} // namespace twoeig

#endif
