#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "locus/errors.hpp"
#include "locus/field.hpp"

namespace locus {

using Matrix = std::vector<std::vector<FieldElement>>;

namespace detail {

/// Bareiss fraction-free elimination on the integer augmented matrix [A|b],
/// then rational back-substitution.  Row scaling by the denominator lcm
/// leaves the solution unchanged.
inline std::vector<FieldElement> solve_square_rational(const Matrix& a,
                                                       const std::vector<FieldElement>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt scale = 1;
        for (std::size_t j = 0; j < n; ++j)
            scale = lcm(scale, denominator(a[i][j].rational()));
        scale = lcm(scale, denominator(b[i].rational()));
        for (std::size_t j = 0; j < n; ++j) {
            const BigRational& q = a[i][j].rational();
            m[i][j] = numerator(q) * (scale / denominator(q));
        }
        const BigRational& q = b[i].rational();
        m[i][n] = numerator(q) * (scale / denominator(q));
    }

    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n)
            throw InternalInconsistencyError("singular system in exact solve");
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<BigRational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        BigRational acc(m[k][n]);
        for (std::size_t j = k + 1; j < n; ++j)
            acc -= BigRational(m[k][j]) * x[j];
        x[k] = acc / BigRational(m[k][k]);
    }

    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(FieldElement::from_rational(x[k]));
    return out;
}

/// Standard Gaussian elimination with modular inverses.
inline std::vector<FieldElement> solve_square_prime(Matrix a, std::vector<FieldElement> b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n)
            throw InternalInconsistencyError("singular system in exact solve");
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            std::swap(b[pivot], b[k]);
        }
        const FieldElement inv = a[k][k].inverse();
        for (std::size_t j = k; j < n; ++j) a[k][j] = a[k][j] * inv;
        b[k] = b[k] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            const FieldElement f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            b[i] = b[i] - f * b[k];
        }
    }
    return b;
}

}  // namespace detail

/// Solves the nonsingular square system A x = b exactly.
inline std::vector<FieldElement> solve_square(const FieldDescriptor& d, const Matrix& a,
                                              const std::vector<FieldElement>& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("solve_square: shape mismatch");
    if (d.is_rationals())
        return detail::solve_square_rational(a, b);
    return detail::solve_square_prime(a, b);
}

/// Basis of the null space of A (rows x cols), via exact reduced row
/// echelon form.  Each basis vector sets one free column to 1.
inline std::vector<std::vector<FieldElement>> null_space(const FieldDescriptor& d, Matrix a,
                                                         std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) std::swap(a[pivot], a[row]);
        const FieldElement inv = a[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[row][j] = a[row][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const FieldElement f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols, FieldElement::zero(d));
        v[free] = FieldElement::one(d);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace locus
