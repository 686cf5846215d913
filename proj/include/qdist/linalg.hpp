#pragma once

// Small exact linear algebra over Rational: Gaussian elimination, rank,
// and affine solution sets.  Matrices here are tiny (a handful of rows).

#include <optional>
#include <vector>

#include "qdist/qvec.hpp"

namespace qdist {

using RMatrix = std::vector<std::vector<Rational>>;

struct AffineSet {
    QVec origin;                  // one particular solution
    std::vector<QVec> directions; // basis of the homogeneous solution space
    std::size_t dimension() const { return directions.size(); }
};

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(RMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational factor = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RMatrix m) { return rref(m).size(); }

/// Full solution set of A x = b, or nullopt when inconsistent.
inline std::optional<AffineSet> solve_affine(const RMatrix& a, const std::vector<Rational>& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    RMatrix aug(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row

    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    AffineSet out;
    out.origin = QVec(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) out.origin[pivots[i]] = aug[i][cols];

    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec dir(cols);
        dir[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) dir[pivots[i]] = -aug[i][free_col];
        out.directions.push_back(std::move(dir));
    }
    return out;
}

}  // namespace qdist
