#pragma once

#include <vector>

#include "popa/matrix.hpp"
#include "popa/types.hpp"

namespace popa {

// Inputs to the partial matching loss: predicted costs and biases, the
// feasibility parameters, and the ground-truth matching.
struct LossInputs {
    Matrix cost;  // m x n; clamped to [1e-7, 1 - 1e-7] before logs
    std::vector<double> alpha;
    std::vector<double> beta;
    double rho = 0.4;
    PartialAssignment truth;
    double lambda = 0.5;  // in (0, 1]
};

struct LossReport {
    double l_cost = 0.0;
    double l_bias = 0.0;
    double l_total = 0.0;
    Matrix grad_cost;                 // zero wherever the attention mask is off
    std::vector<double> grad_alpha;
    std::vector<double> grad_beta;
    long long active_pairs = 0;       // number of mask-active entries
};

// Clamp applied to cost entries before any log.
inline constexpr double kLossClamp = 1e-7;

void validate_loss_inputs(const LossInputs& in);

// Z_ij = 1 iff the pair is ground truth or its (raw) cost is at most the
// feasibility threshold rho*(alpha_i + beta_j).
Mask attention_mask(const LossInputs& in);

// Loss values only: masked cross-entropy on costs plus the squared bias pull
// toward 1 on matched nodes, combined as l_cost + lambda * l_bias.
LossReport partial_matching_loss(const LossInputs& in);

// Values plus analytic gradients. The mask is treated as a constant (the
// indicator carries no gradient).
LossReport loss_gradients(const LossInputs& in);

// Central finite differences of l_total against every cost/alpha/beta
// coordinate; returns the max relative error vs the analytic gradients.
// Throws when the step leaves [1e-7, 1e-4] or any cost entry sits within
// 2h*max(1, rho) of {0, 1} or of its feasibility threshold (the mask must be
// locally constant for the comparison to make sense).
double finite_difference_check(const LossInputs& in, double h);

namespace serial {
LossReport loss_gradients(const LossInputs& in);
}

}  // namespace popa
