#pragma once

#include <vector>

#include "pfaffian/scalar.hpp"

namespace pfaffian {

using FpMatrix = std::vector<std::vector<Fp>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over F_p by Gaussian elimination. The argument is consumed.
inline int rank_mod_p(FpMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        Fp inv = m[row][col].inv();
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            Fp factor = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Exact inverse by Gauss-Jordan elimination; throws on singular input.
inline RationalMatrix invert(RationalMatrix m) {
    const std::size_t n = m.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw Error("singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] = m[col][c] / d;
            inv[col][c] = inv[col][c] / d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] = m[r][c] - f * m[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace pfaffian
