#pragma once

#include "weyl/rat.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace weyl {

/// A x = b over Q.
struct LinearSystem {
    std::size_t unknowns = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;

    void add_equation(std::vector<Rat> row, Rat value) {
        if (row.size() != unknowns) throw std::invalid_argument("equation width mismatch");
        rows.push_back(std::move(row));
        rhs.push_back(std::move(value));
    }
};

struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<Rat> particular;             // free variables set to zero
    std::vector<std::vector<Rat>> nullspace;  // one vector per free variable

    /// True when every solution has a zero in coordinate i.
    bool forced_zero(std::size_t i) const {
        if (!consistent) return true;
        if (!particular[i].is_zero()) return false;
        for (const auto& v : nullspace)
            if (!v[i].is_zero()) return false;
        return true;
    }
};

/// Fraction-free Gauss-Jordan elimination: rows are scaled to integers, eliminated by
/// cross-multiplication and divided by their content after every step.
inline LinearSolution solve(const LinearSystem& sys) {
    const std::size_t n = sys.unknowns;
    std::vector<std::vector<Integer>> m;
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        Integer l = sys.rhs[r].den();
        for (const auto& c : sys.rows[r]) l = lcm(l, c.den());
        std::vector<Integer> row;
        for (const auto& c : sys.rows[r]) row.push_back(c.num() * (l / c.den()));
        row.push_back(sys.rhs[r].num() * (l / sys.rhs[r].den()));
        m.push_back(std::move(row));
    }
    auto reduce_content = [](std::vector<Integer>& row) {
        Integer g = 0;
        for (const auto& c : row) g = gcd(g, c);
        if (g > 1)
            for (auto& c : row) c /= g;
    };

    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < n && prow < m.size(); ++col) {
        std::size_t sel = prow;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[prow]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == prow || m[r][col] == 0) continue;
            const Integer a = m[prow][col], b = m[r][col];
            for (std::size_t c = 0; c <= n; ++c) m[r][c] = a * m[r][c] - b * m[prow][c];
            reduce_content(m[r]);
        }
        pivot_col.push_back(col);
        ++prow;
    }

    LinearSolution sol;
    sol.rank = pivot_col.size();
    for (std::size_t r = sol.rank; r < m.size(); ++r)
        if (m[r][n] != 0) return sol;
    sol.consistent = true;
    sol.particular.assign(n, Rat(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < sol.rank; ++r) {
        is_pivot[pivot_col[r]] = true;
        sol.particular[pivot_col[r]] = Rat(m[r][n], m[r][pivot_col[r]]);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = Rat(1);
        for (std::size_t r = 0; r < sol.rank; ++r) v[pivot_col[r]] = -Rat(m[r][f], m[r][pivot_col[r]]);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

}  // namespace weyl
