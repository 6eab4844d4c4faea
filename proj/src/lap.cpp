#include "popa/lap.hpp"

#include <cmath>
#include <limits>

namespace popa {

LapResult solve_lap(const Matrix& cost) {
    if (cost.rows() != cost.cols()) throw ValidationError("LAP cost matrix must be square");
    for (double c : cost.data())
        if (!std::isfinite(c)) throw ValidationError("non-finite cost entry");

    const int n = static_cast<int>(cost.rows());
    LapResult res;
    if (n == 0) return res;

    constexpr double kInf = std::numeric_limits<double>::infinity();
    // Dual potentials over a virtual 0th row/column; col_to_row[j] is the row
    // currently matched to column j.
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> col_to_row(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> prev_col(static_cast<std::size_t>(n) + 1, 0);
    std::vector<double> min_reduced(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        col_to_row[0] = i;
        int j0 = 0;
        std::fill(min_reduced.begin(), min_reduced.end(), kInf);
        std::fill(visited.begin(), visited.end(), 0);
        do {
            visited[static_cast<std::size_t>(j0)] = 1;
            const int i0 = col_to_row[static_cast<std::size_t>(j0)];
            double delta = kInf;
            int j1 = 0;
            const double* row = cost.row(static_cast<std::size_t>(i0 - 1));
            for (int j = 1; j <= n; ++j) {
                if (visited[static_cast<std::size_t>(j)]) continue;
                const double reduced = row[j - 1] - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (reduced < min_reduced[static_cast<std::size_t>(j)]) {
                    min_reduced[static_cast<std::size_t>(j)] = reduced;
                    prev_col[static_cast<std::size_t>(j)] = j0;
                }
                // strict < keeps the lowest column index on ties
                if (min_reduced[static_cast<std::size_t>(j)] < delta) {
                    delta = min_reduced[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (visited[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(col_to_row[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    min_reduced[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (col_to_row[static_cast<std::size_t>(j0)] != 0);
        // walk the augmenting path back, flipping matched columns
        do {
            const int j1 = prev_col[static_cast<std::size_t>(j0)];
            col_to_row[static_cast<std::size_t>(j0)] = col_to_row[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    res.perm.map.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        res.perm.map[static_cast<std::size_t>(col_to_row[static_cast<std::size_t>(j)] - 1)] = j - 1;
    double value = 0.0;  // recomputed row-major from the assignment
    for (int i = 0; i < n; ++i) value += cost(static_cast<std::size_t>(i), static_cast<std::size_t>(res.perm.map[static_cast<std::size_t>(i)]));
    res.value = value;
    return res;
}

}  // namespace popa
