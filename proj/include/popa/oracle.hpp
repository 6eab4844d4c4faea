#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "popa/lap.hpp"
#include "popa/types.hpp"

namespace popa {

// |M| for an m x n problem: sum over k of C(m,k)*C(n,k)*k!.
// Throws ValidationError once the count exceeds 2^63 - 1.
std::uint64_t count_partial_assignments(int m, int n);

// Visits every element of M exactly once, in the documented order: cardinality
// ascending, then lexicographic on the (source, target) pair list. The visited
// reference is reused between calls; copy it to keep it.
void for_each_partial_assignment(int m, int n, const std::function<void(const PartialAssignment&)>& visit);

// Exhaustive minimizer of total_cost over M. Ties resolve to the first
// candidate in enumeration order. Guarded: |M| must not exceed 10^7.
std::pair<PartialAssignment, double> brute_force_pgm(const Instance& inst);

// Exhaustive minimizer over all n! permutations, n <= 8. Ties resolve to the
// lexicographically smallest permutation.
std::pair<Permutation, double> brute_force_lap(const Matrix& cost);

}  // namespace popa
