#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "popa/types.hpp"

namespace popa {

// Two-band synthetic instance: k planted pairs at matched_cost, everything
// else uniform in [base_low, base_high], optional Gaussian noise, clipped to
// [0, 1]. Biases default to all-ones.
struct PlantSpec {
    int m = 4;
    int n = 5;
    int k = 3;
    double matched_cost = 0.05;
    double base_low = 0.7;
    double base_high = 1.0;
    double noise_sigma = 0.0;
    double rho = 0.4;
    std::uint64_t seed = 0;
};

// Deterministic given the seed; the planted pairs become the ground truth.
Instance planted_instance(const PlantSpec& spec);

struct SweepRow {
    double rho = 0.0;
    int matched_count = 0;
    double total_cost = 0.0;
    double unmatched_mass = 0.0;       // weighted unmatched mass, no rho factor
    std::optional<double> f1;          // present when ground truth is nonempty
};

// Solves the instance at each rho (ascending, nonempty); fans out across
// threads via the batch solver.
std::vector<SweepRow> rho_sweep(const Instance& inst, std::span<const double> rhos);

}  // namespace popa
