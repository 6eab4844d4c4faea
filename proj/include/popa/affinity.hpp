#pragma once

#include <utility>
#include <vector>

#include "popa/matrix.hpp"

namespace popa {

struct SinkhornConfig {
    double tau = 0.1;     // softmax temperature
    int max_iters = 200;
    double tol = 1e-6;    // max marginal residual on the padded square matrix
};

struct SinkhornResult {
    Matrix s;             // m x n, rows sum to 1, column sums <= 1 + tol
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

// Scales exp(A / tau) to (near-)doubly-stochastic form. The m x n affinity is
// padded with n - m uniform dummy rows, row/column normalizations alternate on
// the square matrix until the worst marginal residual drops below cfg.tol,
// dummy rows are discarded, and one final row normalization makes the kept row
// sums exact. Requires m <= n. Non-convergence is reported through the result,
// not thrown; the row max is subtracted before exponentiation so large
// affinities cannot overflow.
SinkhornResult sinkhorn_normalize(const Matrix& affinity, const SinkhornConfig& cfg = {});

// C = 1 - S elementwise. Entries must lie in [0, 1] within 1e-9.
Matrix cost_from_affinity(const Matrix& s);

// Per-node matching biases from row/column maxima of the clamped affinity:
// r_i = max_j max(A_ij, 0), bias = 2*(sigmoid(w_rs * r) - 0.5), in [0, 1).
std::pair<std::vector<double>, std::vector<double>> matching_biases(const Matrix& affinity, double w_rs);

namespace serial {
SinkhornResult sinkhorn_normalize(const Matrix& affinity, const SinkhornConfig& cfg = {});
}

}  // namespace popa
