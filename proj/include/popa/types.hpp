#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "popa/matrix.hpp"

namespace popa {

// Raised when an input violates a domain invariant. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Injective partial map from source rows to target columns. Indices are
// 0-based everywhere in the library; file formats convert to 1-based at the
// I/O boundary.
struct PartialAssignment {
    int m = 0;
    int n = 0;
    std::vector<int> row_to_col;  // length m, -1 = unmatched

    static PartialAssignment empty(int m, int n) {
        PartialAssignment pa;
        pa.m = m;
        pa.n = n;
        pa.row_to_col.assign(static_cast<std::size_t>(m), -1);
        return pa;
    }

    // Builds from 0-based (source, target) pairs, rejecting duplicate rows,
    // duplicate columns, and out-of-range indices.
    static PartialAssignment from_pairs(int m, int n, const std::vector<std::pair<int, int>>& pairs);

    int matched_count() const {
        int c = 0;
        for (int j : row_to_col) c += (j >= 0);
        return c;
    }

    bool matches(int i, int j) const { return row_to_col[static_cast<std::size_t>(i)] == j; }

    // Pairs sorted by source index.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < m; ++i)
            if (row_to_col[static_cast<std::size_t>(i)] >= 0) out.emplace_back(i, row_to_col[static_cast<std::size_t>(i)]);
        return out;
    }

    // Same matching with source/target roles swapped.
    PartialAssignment flipped() const {
        PartialAssignment f = empty(n, m);
        for (int i = 0; i < m; ++i) {
            int j = row_to_col[static_cast<std::size_t>(i)];
            if (j >= 0) f.row_to_col[static_cast<std::size_t>(j)] = i;
        }
        return f;
    }

    bool operator==(const PartialAssignment&) const = default;
};

// A full partial-graph-matching problem: costs, matching biases, and the
// unbalancedness parameter, plus an optional ground-truth matching.
struct Instance {
    Matrix cost;  // m x n
    std::vector<double> alpha;
    std::vector<double> beta;
    double rho = 0.4;
    std::optional<PartialAssignment> ground_truth;

    int m() const { return static_cast<int>(cost.rows()); }
    int n() const { return static_cast<int>(cost.cols()); }
};

// Solver output. When the input had m > n the solver works on the transposed
// instance and flips the assignment back; `transposed` is set and alpha_star /
// lap_value / feasible_pairs describe the orientation that was embedded, so
// the accounting identity lap_value = total_cost + rho*(n-m)*alpha_star holds with
// the solved (m <= n) dimensions.
struct SolveReport {
    PartialAssignment assignment;
    double total_cost = 0.0;
    double transported_cost = 0.0;
    double unmatch_penalty = 0.0;
    double alpha_star = 0.0;
    long long feasible_pairs = 0;
    double lap_value = 0.0;
    bool transposed = false;
};

}  // namespace popa
