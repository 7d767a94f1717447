#pragma once

// Small dense exact linear algebra over Rational: row reduction, rank,
// kernel bases, consistent-system solves. Sizes here are tiny (the
// F-condition system has at most deg(denom) rows), so plain fraction
// pivoting is fine.

#include "xjacobi/scalar.hpp"

#include <optional>
#include <vector>

namespace xjacobi::detail {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major, rectangular

struct Echelon {
    RatMatrix rows;           // reduced row echelon form
    std::vector<int> pivots;  // pivot column per nonzero row
    int rank = 0;
};

inline Echelon reduced_echelon(RatMatrix m) {
    Echelon e;
    if (m.empty()) return e;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row]) v = v * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= factor * m[row][c];
        }
        e.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    e.rank = static_cast<int>(row);
    m.resize(row);
    e.rows = std::move(m);
    return e;
}

inline int rank(RatMatrix m) { return reduced_echelon(std::move(m)).rank; }

/// Basis of { v : M v = 0 }, each vector of length ncols.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m, std::size_t ncols) {
    const Echelon e = reduced_echelon(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(ncols, Rational(0));
        v[free] = 1;
        for (int r = 0; r < e.rank; ++r)
            v[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])] =
                -e.rows[static_cast<std::size_t>(r)][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Any solution of M x = rhs, or nullopt when inconsistent.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs) {
    if (m.empty()) return RatVector{};
    const std::size_t ncols = m[0].size();
    RatMatrix aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
    const Echelon e = reduced_echelon(std::move(aug));
    RatVector x(ncols, Rational(0));
    for (int r = 0; r < e.rank; ++r) {
        const int p = e.pivots[static_cast<std::size_t>(r)];
        if (p == static_cast<int>(ncols)) return std::nullopt;  // pivot in rhs column
        x[static_cast<std::size_t>(p)] = e.rows[static_cast<std::size_t>(r)][ncols];
    }
    return x;
}

}  // namespace xjacobi::detail
