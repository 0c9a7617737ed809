#pragma once

#include "halo/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace halo {

using RatMat = std::vector<RatVec>;

namespace detail {

// Row echelon reduction in place. Returns pivot column indices; pivots are only
// taken from the first `pivot_cols` columns (augmented columns stay passive).
inline std::vector<std::size_t> echelonize(RatMat& m, std::size_t pivot_cols = SIZE_MAX) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < std::min(cols, pivot_cols) && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline int matrix_rank(RatMat m) {
    return static_cast<int>(detail::echelonize(m).size());
}

/// Solves the square system A x = b exactly; nullopt when A is singular.
inline std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    const std::size_t n = a.size();
    if (n == 0) return RatVec{};
    RatMat aug(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("solve_linear: non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    const auto pivots = detail::echelonize(aug, n);
    if (pivots.size() != n) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
    return x;
}

/// A nonzero kernel vector of the row system, or nullopt when the kernel is trivial.
inline std::optional<RatVec> nullspace_direction(RatMat m) {
    if (m.empty()) return std::nullopt;
    const std::size_t cols = m[0].size();
    const auto pivots = detail::echelonize(m);
    if (pivots.size() >= cols) return std::nullopt;
    // Free column: the first column that is not a pivot.
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    RatVec x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free_col];
    return x;
}

/// Affine dimension of a point set (rank of the difference matrix).
inline int affine_dimension(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    RatMat diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs));
}

}  // namespace halo
