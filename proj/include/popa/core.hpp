#pragma once

#include "popa/types.hpp"

namespace popa {

// Checks every Instance invariant (shapes, finiteness, nonnegative biases,
// rho > 0, well-formed ground truth) and returns the instance unchanged.
// Throws ValidationError otherwise.
const Instance& validate_instance(const Instance& inst);

// Throws ValidationError unless pa is a valid partial assignment for (m, n).
void validate_assignment(const PartialAssignment& pa, int m, int n);

// Transported cost <pi, C>_F, accumulated in row-major order.
double transported_cost(const Instance& inst, const PartialAssignment& pi);

// Weighted unmatched mass <alpha, 1 - pi_1> + <beta, 1 - pi_2> (no rho factor).
double unmatched_mass(const Instance& inst, const PartialAssignment& pi);

// Objective value <pi, C>_F + rho*(<alpha, 1 - pi_1> + <beta, 1 - pi_2>).
// Sum order is fixed (transport row-major, then alpha, then beta) so repeated
// evaluation is bit-reproducible.
double total_cost(const Instance& inst, const PartialAssignment& pi);

// Swaps source/target roles: C transposed, alpha/beta exchanged, ground truth
// flipped. An involution.
Instance transpose_instance(const Instance& inst);

}  // namespace popa
