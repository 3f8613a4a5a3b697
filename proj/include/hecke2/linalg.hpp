#ifndef HECKE2_LINALG_HPP
#define HECKE2_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hecke2/errors.hpp"

namespace hecke2 {

/// Dense matrix over an exact field (row-major). The fill element fixes the
/// field instance (prime-field values carry their modulus).
template <typename F>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const F& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const F& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
        for (size_t i = 0; i < data_.size(); ++i) {
            if (!(data_[i] == rhs.data_[i])) return false;
        }
        return true;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
            throw std::invalid_argument("matrix shapes differ");
        }
        Matrix result = *this;
        for (size_t i = 0; i < data_.size(); ++i) {
            result.data_[i] = result.data_[i] - rhs.data_[i];
        }
        return result;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes differ");
        F zero = data_.empty() ? rhs.data_.at(0) - rhs.data_.at(0)
                               : data_.at(0) - data_.at(0);
        Matrix result(rows_, rhs.cols_, zero);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t k = 0; k < cols_; ++k) {
                const F& a = at(r, k);
                if (a.is_zero()) continue;
                for (size_t c = 0; c < rhs.cols_; ++c) {
                    result.at(r, c) = result.at(r, c) + a * rhs.at(k, c);
                }
            }
        }
        return result;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length differs from cols");
        F zero = data_.at(0) - data_.at(0);
        std::vector<F> result(rows_, zero);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols_; ++c) {
                if (!at(r, c).is_zero()) result[r] = result[r] + at(r, c) * v[c];
            }
        }
        return result;
    }

    /// Append the rows of another matrix with the same column count.
    void stack(const Matrix& below) {
        if (cols_ != below.cols_) throw std::invalid_argument("matrix shapes differ");
        data_.insert(data_.end(), below.data_.begin(), below.data_.end());
        rows_ += below.rows_;
    }

private:
    size_t rows_, cols_;
    std::vector<F> data_;
};

/// Rank by exact Gaussian elimination (the copy is consumed).
template <typename F>
size_t rank_of(Matrix<F> a) {
    size_t rank = 0;
    for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        size_t pivot = rank;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        for (size_t c = col; c < a.cols(); ++c) std::swap(a.at(rank, c), a.at(pivot, c));
        F inv = a.at(rank, col).inverse();
        for (size_t c = col; c < a.cols(); ++c) a.at(rank, c) = a.at(rank, c) * inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            F factor = a.at(r, col);
            for (size_t c = col; c < a.cols(); ++c) {
                a.at(r, c) = a.at(r, c) - factor * a.at(rank, c);
            }
        }
        ++rank;
    }
    return rank;
}

template <typename F>
size_t nullity_of(const Matrix<F>& a) {
    return a.cols() - rank_of(a);
}

/// Incrementally maintained echelon basis of a growing span.
template <typename F>
class SpanBasis {
public:
    explicit SpanBasis(size_t dim) : dim_(dim) {}

    size_t dimension() const { return rows_.size(); }

    /// Returns true when the vector enlarged the span.
    bool insert(std::vector<F> v) {
        if (v.size() != dim_) throw std::invalid_argument("vector length differs from span");
        reduce(v);
        size_t pivot = 0;
        while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
        if (pivot == dim_) return false;
        F inv = v[pivot].inverse();
        for (size_t c = pivot; c < dim_; ++c) v[c] = v[c] * inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

    bool contains(std::vector<F> v) const {
        if (v.size() != dim_) throw std::invalid_argument("vector length differs from span");
        reduce(v);
        for (const F& x : v) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

private:
    void reduce(std::vector<F>& v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            F factor = v[pivot];
            for (size_t c = pivot; c < dim_; ++c) v[c] = v[c] - factor * row[c];
        }
    }

    size_t dim_;
    std::vector<std::pair<size_t, std::vector<F>>> rows_;
};

}  // namespace hecke2

#endif
