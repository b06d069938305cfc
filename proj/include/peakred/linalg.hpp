#ifndef PEAKRED_LINALG_HPP
#define PEAKRED_LINALG_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace peakred {

/// Solution set of A x = b: a particular solution plus a null-space basis.
struct LinearSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> null_basis;
};

/// Exact Gauss-Jordan elimination; nullopt when the system is inconsistent.
inline std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  std::size_t cols) {
    std::size_t rows = a.size();
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_of_col[c] = static_cast<int>(r++);
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;
    LinearSolution s;
    s.particular.assign(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) s.particular[c] = b[static_cast<std::size_t>(pivot_of_col[c])];
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][f];
        s.null_basis.push_back(std::move(v));
    }
    return s;
}

}  // namespace peakred

#endif
