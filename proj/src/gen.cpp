#include "popa/gen.hpp"

#include <algorithm>
#include <random>

#include "popa/core.hpp"
#include "popa/metrics.hpp"
#include "popa/pgm.hpp"

namespace popa {

namespace {

// First k slots of a seeded Fisher-Yates shuffle of 0..count-1.
std::vector<int> sample_indices(int count, int k, std::mt19937_64& rng) {
    std::vector<int> all(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, count - 1);
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(pick(rng))]);
    }
    all.resize(static_cast<std::size_t>(k));
    return all;
}

}  // namespace

Instance planted_instance(const PlantSpec& spec) {
    if (spec.m < 0 || spec.n < 0) throw ValidationError("negative dimension");
    if (spec.k < 0 || spec.k > std::min(spec.m, spec.n)) throw ValidationError("k must be in [0, min(m, n)]");
    if (spec.base_low > spec.base_high) throw ValidationError("base_low must not exceed base_high");
    if (spec.noise_sigma < 0.0) throw ValidationError("noise_sigma must be nonnegative");
    if (spec.rho <= 0.0) throw ValidationError("rho must be positive");

    std::mt19937_64 rng(spec.seed);
    const std::vector<int> sources = sample_indices(spec.m, spec.k, rng);
    const std::vector<int> targets = sample_indices(spec.n, spec.k, rng);

    Instance inst;
    inst.rho = spec.rho;
    inst.alpha.assign(static_cast<std::size_t>(spec.m), 1.0);
    inst.beta.assign(static_cast<std::size_t>(spec.n), 1.0);
    inst.cost = Matrix(static_cast<std::size_t>(spec.m), static_cast<std::size_t>(spec.n));

    PartialAssignment truth = PartialAssignment::empty(spec.m, spec.n);
    for (int p = 0; p < spec.k; ++p)
        truth.row_to_col[static_cast<std::size_t>(sources[static_cast<std::size_t>(p)])] = targets[static_cast<std::size_t>(p)];

    std::uniform_real_distribution<double> base(spec.base_low, spec.base_high);
    for (int i = 0; i < spec.m; ++i) {
        const int planted_col = truth.row_to_col[static_cast<std::size_t>(i)];
        for (int j = 0; j < spec.n; ++j)
            inst.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = j == planted_col ? spec.matched_cost : base(rng);
    }
    if (spec.noise_sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, spec.noise_sigma);
        for (double& c : inst.cost.data()) c += noise(rng);
    }
    for (double& c : inst.cost.data()) c = std::clamp(c, 0.0, 1.0);

    inst.ground_truth = std::move(truth);
    validate_instance(inst);
    return inst;
}

std::vector<SweepRow> rho_sweep(const Instance& inst, std::span<const double> rhos) {
    validate_instance(inst);
    if (rhos.empty()) throw ValidationError("empty rho list");
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (rhos[i] <= 0.0) throw ValidationError("rho must be positive");
        if (i > 0 && rhos[i] < rhos[i - 1]) throw ValidationError("rho list must be ascending");
    }

    std::vector<Instance> variants(rhos.size(), inst);
    for (std::size_t i = 0; i < rhos.size(); ++i) variants[i].rho = rhos[i];
    const std::vector<SolveReport> reports = solve_batch(variants);

    const bool scored = inst.ground_truth && inst.ground_truth->matched_count() > 0;
    std::vector<SweepRow> rows(rhos.size());
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        rows[i].rho = rhos[i];
        rows[i].matched_count = reports[i].assignment.matched_count();
        rows[i].total_cost = reports[i].total_cost;
        rows[i].unmatched_mass = unmatched_mass(variants[i], reports[i].assignment);
        if (scored) rows[i].f1 = match_f1(reports[i].assignment, *inst.ground_truth).f1;
    }
    return rows;
}

}  // namespace popa
