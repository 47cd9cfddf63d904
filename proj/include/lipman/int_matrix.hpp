#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lipman/errors.hpp"

namespace lipman {

// Exact scalars.  All public arithmetic in the library is arbitrary
// precision; the engine may switch to machine words internally when it can
// prove that safe.
using Int = mpz_class;
using Rational = mpq_class;  // gmp keeps these canonicalized (lowest terms, den > 0)

using IntVector = std::vector<Int>;

// Dense exact integer matrix.  Rectangular in general: the Hilbert-basis
// engine consumes r x k systems such as [M | I_n].  The linear-algebra
// operations that require squareness check it themselves.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw DimensionMismatchError("ragged initializer for IntMatrix");
            for (long v : row) entries_.emplace_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ &&
               entries_ == other.entries_;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    // y = this * x
    IntVector apply(const IntVector& x) const {
        if (x.size() != cols_)
            throw DimensionMismatchError("matrix-vector size mismatch: " +
                                         std::to_string(cols_) + " columns vs " +
                                         std::to_string(x.size()) + " entries");
        IntVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
            y[i] = std::move(acc);
        }
        return y;
    }

    // top-left k x k corner (for leading principal minors)
    IntMatrix leading_submatrix(std::size_t k) const {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
        return sub;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> entries_;  // row-major
};

// n x n matrix of exact rationals; houses -M(E)^{-1}.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::vector<Rational> column(std::size_t j) const {
        std::vector<Rational> col(rows_);
        for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
        return col;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace lipman
