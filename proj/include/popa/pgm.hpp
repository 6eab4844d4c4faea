#pragma once

#include <span>
#include <vector>

#include "popa/lap.hpp"
#include "popa/types.hpp"

namespace popa {

// Square LAP embedding of a partial matching instance: infeasible entries are
// clipped to their threshold and n-m dummy rows are priced at
// rho*(alpha_star + beta_j), with alpha_star = max(alpha) + 1.
struct Embedding {
    Matrix cbar;        // n x n
    double alpha_star = 0.0;
    Mask mask;          // m x n, true where C_ij <= rho*(alpha_i + beta_j)
};

// (m+n)-square balanced-transport embedding used as an independent route to
// the same optimum: Chat_ij = C_ij - rho*(alpha_i + beta_j) on the top-left
// block, 0 elsewhere, with constant offset rho*(||alpha||_1 + ||beta||_1).
struct BalancedEmbedding {
    Matrix chat;  // (m+n) x (m+n)
    double offset = 0.0;
};

struct CrossCheck {
    double lhs = 0.0;  // balanced LAP value + offset
    double rhs = 0.0;  // solver total_cost
    bool ok = false;
};

// mask[i][j] <=> C_ij <= rho*(alpha_i + beta_j); the comparison is non-strict.
Mask feasibility_mask(const Instance& inst);

// Requires m <= n (the solver transposes beforehand when needed).
Embedding build_embedding(const Instance& inst);

// Drops dummy-row assignments and zeroes threshold-violating pairs of a size-n
// permutation; the result is always a valid partial assignment.
PartialAssignment restrict_assignment(const Permutation& perm, const Instance& inst);

// Exact partial matching optimum: embed, solve the LAP, restrict. Instances
// with m > n are transposed on entry and the assignment flipped back.
SolveReport solve(const Instance& inst);

// Order-preserving batch solve; instances are independent, so the batch fans
// out across threads.
std::vector<SolveReport> solve_batch(std::span<const Instance> instances);

BalancedEmbedding build_balanced_embedding(const Instance& inst);

// Solves the balanced (m+n)-square embedding and compares against solve()'s
// total cost; equality within 1e-9 sets ok. Guarded to m + n <= 12.
CrossCheck balanced_cross_check(const Instance& inst);

namespace serial {
Embedding build_embedding(const Instance& inst);
std::vector<SolveReport> solve_batch(std::span<const Instance> instances);
}  // namespace serial

}  // namespace popa
