// Test-only oracles, deliberately independent of the library's linear
// algebra: resistances from exact integer determinants (spanning-tree
// counts) and closed formulas for the standard families.
#pragma once

#include <cstdlib>
#include <vector>

#include "graph.hpp"

namespace resjoin::test_oracle {

using Int = __int128;

// Fraction-free Gaussian elimination (Bareiss); exact for integer input.
inline Int integer_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { pivot = r; break; }
            if (m[pivot][k] == 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

inline std::vector<std::vector<Int>> laplacian_minor(const Graph& g, int drop1, int drop2) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (v != drop1 && v != drop2) keep.push_back(v);
    std::vector<std::vector<Int>> m(keep.size(), std::vector<Int>(keep.size(), 0));
    for (std::size_t a = 0; a < keep.size(); ++a) m[a][a] = g.degree(keep[a]);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (g.has_edge(keep[a], keep[b])) m[a][b] = m[b][a] = -1;
    return m;
}

/// r_ij as the ratio of two Laplacian minors: spanning 2-forests separating
/// i and j over spanning trees. Exact arithmetic; keep order small (<= 10)
/// so both counts sit comfortably inside double precision.
inline double resistance_by_determinants(const Graph& g, int i, int j) {
    const Int trees = integer_determinant(laplacian_minor(g, i, -1));
    const Int forests = integer_determinant(laplacian_minor(g, i, j));
    return static_cast<double>(static_cast<long double>(forests) /
                               static_cast<long double>(trees));
}

/// Resistance between vertices at cycle distance k in C_n: series-parallel
/// reduction of k and n-k unit resistors.
inline double cycle_resistance(int n, int k) {
    return static_cast<double>(k) * (n - k) / static_cast<double>(n);
}

inline double kirchhoff_cycle(int n) {
    const double nn = n;
    return (nn * nn * nn - nn) / 12.0;
}

inline double complete_resistance(int n) { return 2.0 / static_cast<double>(n); }

} // namespace resjoin::test_oracle
