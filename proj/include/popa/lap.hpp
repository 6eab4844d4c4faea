#pragma once

#include <vector>

#include "popa/matrix.hpp"
#include "popa/types.hpp"

namespace popa {

// Bijection on {0..n-1}; map[i] is the column assigned to row i.
struct Permutation {
    std::vector<int> map;

    int size() const { return static_cast<int>(map.size()); }
    static Permutation identity(int n) {
        Permutation p;
        p.map.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.map[static_cast<std::size_t>(i)] = i;
        return p;
    }
    bool operator==(const Permutation&) const = default;
};

struct LapResult {
    Permutation perm;
    double value = 0.0;
};

// Exact minimum-cost assignment on a square matrix via shortest augmenting
// paths with dual potentials, O(n^3) worst case. Deterministic: rows are
// processed in order and ties during augmentation resolve to the lowest
// column index. Comparisons are exact (no epsilon).
// Throws ValidationError on non-square or non-finite input; n = 0 yields the
// empty permutation with value 0.
LapResult solve_lap(const Matrix& cost);

}  // namespace popa
