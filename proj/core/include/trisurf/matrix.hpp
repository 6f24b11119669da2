#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "trisurf/errors.hpp"

namespace trisurf {

/*
 * Matrix<T> — a minimal dense row-major matrix over any ring-like element
 * type (exact rationals, Q(√3) scalars, symbolic period values, integers,
 * complex doubles). Only the operations the toolkit needs are provided;
 * multiplication allows a mixed right-hand element type so that symbolic
 * matrices can be multiplied by integer matrices directly.
 */
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw DimensionMismatch("Matrix: ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = data_[k] + o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    // Mixed-type product: element type of the result is the left-hand T,
    // requiring T + T*S to be defined (e.g. SymbolicScalar × integer).
    template <typename S>
    Matrix multiply(const Matrix<S>& o) const {
        if (cols_ != o.rows())
            throw DimensionMismatch("Matrix: product shape mismatch");
        Matrix r(rows_, o.cols());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                for (std::size_t j = 0; j < o.cols(); ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    template <typename Fn>
    auto map(Fn&& fn) const {
        using U = decltype(fn(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T, typename S>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<S>& b) {
    return a.multiply(b);
}

}  // namespace trisurf
