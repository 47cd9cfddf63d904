#pragma once

// Exact integer/rational linear algebra: fraction-free determinants,
// Sylvester's criterion for negative definiteness, exact inversion.
// No floating point anywhere.

#include <cstddef>
#include <vector>

#include "lipman/errors.hpp"
#include "lipman/int_matrix.hpp"

namespace lipman {

// Determinant by Bareiss fraction-free elimination with row pivoting.
// Every intermediate quantity is an exact integer (divisions are exact),
// which keeps bit growth polynomial instead of exponential.
inline Int determinant(const IntMatrix& m) {
    if (!m.square())
        throw DimensionMismatchError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;  // working copy
    Int prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // exact by the Bareiss identity
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev_pivot.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev_pivot = a(k, k);
    }
    Int det = a(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

// Leading principal minors det(m[0..k-1, 0..k-1]) for k = 1..n.
inline std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    if (!m.square())
        throw DimensionMismatchError("principal minors require a square matrix");
    std::vector<Int> minors;
    minors.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k)
        minors.push_back(determinant(m.leading_submatrix(k)));
    return minors;
}

// Sylvester's criterion: m is negative definite iff the leading principal
// minors strictly alternate, sign(D_k) = (-1)^k.  A zero minor means
// semidefinite at best and yields false.
inline bool is_negative_definite(const IntMatrix& m) {
    if (!m.square())
        throw DimensionMismatchError("definiteness requires a square matrix");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw NonSymmetricError(i, j);
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        const Int d = determinant(m.leading_submatrix(k));
        const int want = (k % 2 == 1) ? -1 : 1;
        if (sgn(d) != want) return false;
    }
    return true;
}

// Index (1-based) of the first leading principal minor violating the
// alternation, or 0 if negative definite.  Used for structured errors.
inline std::size_t first_bad_minor(const IntMatrix& m) {
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        const Int d = determinant(m.leading_submatrix(k));
        const int want = (k % 2 == 1) ? -1 : 1;
        if (sgn(d) != want) return k;
    }
    return 0;
}

// Solve m * X = -I exactly; columns of X are the rays F_i.  Exact rational
// Gauss-Jordan with row pivoting; gmp keeps entries in lowest terms.
inline RatMatrix neg_inverse(const IntMatrix& m) {
    if (!m.square())
        throw DimensionMismatchError("neg_inverse requires a square matrix");
    const std::size_t n = m.rows();
    // augmented [m | -I] over the rationals
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(m(i, j));
        aug[i][n + i] = Rational(-1);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && aug[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularMatrixError();
        if (pivot != k) std::swap(aug[pivot], aug[k]);
        const Rational inv = 1 / aug[k][k];
        for (std::size_t j = k; j < 2 * n; ++j) aug[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug[i][k] == 0) continue;
            const Rational factor = aug[i][k];
            for (std::size_t j = k; j < 2 * n; ++j)
                aug[i][j] -= factor * aug[k][j];
        }
    }
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = aug[i][n + j];
    return x;
}

// lcm of the denominators: the least g with g*col integral.
inline Int lcm_denominators(const std::vector<Rational>& col) {
    if (col.empty())
        throw DimensionMismatchError("lcm_denominators of an empty column");
    Int l = 1;
    for (const Rational& r : col) {
        Int result;
        mpz_lcm(result.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
        l = std::move(result);
    }
    return l;
}

}  // namespace lipman
