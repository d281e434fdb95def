#include "sumsynth/linear.hpp"

#include <stdexcept>

namespace sumsynth {

LinearSolution solve_exact_linear(const ExactMatrix& A, const std::vector<Rational>& b) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    if (m == 0 || n == 0) throw std::invalid_argument("solve_exact_linear: empty matrix");
    if (b.size() != m) throw std::invalid_argument("solve_exact_linear: dimension mismatch");

    // Augmented [A | b].
    ExactMatrix M(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n) = b[i];
    }

    std::vector<std::size_t> pivot_col;  // pivot column of each pivot row
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // Pivot with the largest |num * den|; size control only, the
        // classification is the same for any nonzero pivot.
        std::size_t best = m;
        BigInt best_mag = 0;
        for (std::size_t i = row; i < m; ++i) {
            if (M.at(i, col).is_zero()) continue;
            BigInt mag = M.at(i, col).cross_magnitude();
            if (best == m || mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (best == m) continue;
        if (best != row) {
            for (std::size_t j = col; j <= n; ++j) std::swap(M.at(row, j), M.at(best, j));
        }
        Rational inv = Rational(1) / M.at(row, col);
        for (std::size_t j = col; j <= n; ++j) M.at(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || M.at(i, col).is_zero()) continue;
            Rational factor = M.at(i, col);
            for (std::size_t j = col; j <= n; ++j)
                M.at(i, j) -= factor * M.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    // Inconsistency check: a reduced row 0 = rhs with rhs != 0.
    for (std::size_t i = row; i < m; ++i) {
        if (!M.at(i, n).is_zero()) {
            LinearSolution s;
            s.kind = SolveKind::Inconsistent;
            s.certificate_row.resize(n);
            for (std::size_t j = 0; j < n; ++j) s.certificate_row[j] = M.at(i, j);
            s.certificate_rhs = M.at(i, n);
            return s;
        }
    }

    LinearSolution s;
    s.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) s.solution[pivot_col[i]] = M.at(i, n);

    if (pivot_col.size() == n) {
        s.kind = SolveKind::Unique;
        return s;
    }

    s.kind = SolveKind::Underdetermined;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -M.at(i, free);
        s.kernel.push_back(std::move(v));
    }
    return s;
}

}  // namespace sumsynth
