#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "psym/algebra/rational.hpp"

namespace psym {

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n, const T& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!psym::is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QVector = std::vector<Rational>;
using QMatrix = Matrix<Rational>;

/// Row vector times matrix. Zero entries of v are skipped.
template <class T>
std::vector<T> vec_mat_mul(std::span<const T> v, const Matrix<T>& m) {
    if (v.size() != m.rows())
        throw DimensionError("vec_mat_mul: vector of length " + std::to_string(v.size()) + " times " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    std::vector<T> out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const T& entry = m(i, j);
            if (is_zero(entry)) continue;
            out[j] += v[i] * entry;
        }
    }
    return out;
}

template <class T>
std::vector<T> vec_mat_mul(const std::vector<T>& v, const Matrix<T>& m) {
    return vec_mat_mul(std::span<const T>(v), m);
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    T sum{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i]) || is_zero(b[i])) continue;
        sum += a[i] * b[i];
    }
    return sum;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    return dot(std::span<const T>(a), std::span<const T>(b));
}

template <class T>
bool is_zero_vector(std::span<const T> v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
    return is_zero_vector(std::span<const T>(v));
}

}  // namespace psym
