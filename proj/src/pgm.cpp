#include "popa/pgm.hpp"

#include <cmath>
#include <cstddef>

#include "popa/core.hpp"
#include "popa/threads.hpp"

namespace popa {

namespace {

double max_alpha(const std::vector<double>& alpha) {
    double mx = 0.0;  // max over empty alpha is 0 (m = 0 instances)
    for (double a : alpha) mx = a > mx ? a : mx;
    return mx;
}

void fill_embedding_row(const Instance& inst, double alpha_star, int i, Matrix& cbar, Mask& mask) {
    const int m = inst.m();
    const int n = inst.n();
    const double rho = inst.rho;
    double* out = cbar.row(static_cast<std::size_t>(i));
    if (i < m) {
        const double* cin = inst.cost.row(static_cast<std::size_t>(i));
        const double ai = inst.alpha[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const double threshold = rho * (ai + inst.beta[static_cast<std::size_t>(j)]);
            const bool feasible = cin[j] <= threshold;
            mask.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), feasible);
            out[j] = feasible ? cin[j] : threshold;
        }
    } else {
        for (int j = 0; j < n; ++j) out[j] = rho * (alpha_star + inst.beta[static_cast<std::size_t>(j)]);
    }
}

Embedding build_embedding_impl(const Instance& inst, bool parallel) {
    validate_instance(inst);
    const int m = inst.m();
    const int n = inst.n();
    if (m > n) throw ValidationError("embedding requires m <= n");

    Embedding e;
    e.alpha_star = max_alpha(inst.alpha) + 1.0;
    e.cbar = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    e.mask = Mask(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    if (parallel && n >= 64) {  // parallel region not worth it below this
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (int i = 0; i < n; ++i) fill_embedding_row(inst, e.alpha_star, i, e.cbar, e.mask);
    } else {
        for (int i = 0; i < n; ++i) fill_embedding_row(inst, e.alpha_star, i, e.cbar, e.mask);
    }
    return e;
}

// Solves an instance already in m <= n orientation.
SolveReport solve_oriented(const Instance& inst) {
    const Embedding e = build_embedding_impl(inst, true);
    const LapResult lap = solve_lap(e.cbar);

    SolveReport report;
    report.assignment = restrict_assignment(lap.perm, inst);
    report.transported_cost = transported_cost(inst, report.assignment);
    report.unmatch_penalty = inst.rho * unmatched_mass(inst, report.assignment);
    report.total_cost = total_cost(inst, report.assignment);
    report.alpha_star = e.alpha_star;
    report.feasible_pairs = static_cast<long long>(e.mask.count());
    report.lap_value = lap.value;
    return report;
}

}  // namespace

Mask feasibility_mask(const Instance& inst) {
    validate_instance(inst);
    const int m = inst.m();
    const int n = inst.n();
    Mask mask(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        const double ai = inst.alpha[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const double threshold = inst.rho * (ai + inst.beta[static_cast<std::size_t>(j)]);
            mask.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                     inst.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) <= threshold);
        }
    }
    return mask;
}

Embedding build_embedding(const Instance& inst) { return build_embedding_impl(inst, true); }

Embedding serial::build_embedding(const Instance& inst) { return build_embedding_impl(inst, false); }

PartialAssignment restrict_assignment(const Permutation& perm, const Instance& inst) {
    const int m = inst.m();
    const int n = inst.n();
    if (m > n) throw ValidationError("restriction requires m <= n");
    if (perm.size() != n) throw ValidationError("dimension mismatch: permutation");

    PartialAssignment pa = PartialAssignment::empty(m, n);
    for (int i = 0; i < m; ++i) {
        const int j = perm.map[static_cast<std::size_t>(i)];
        const double threshold = inst.rho * (inst.alpha[static_cast<std::size_t>(i)] + inst.beta[static_cast<std::size_t>(j)]);
        if (inst.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) <= threshold)
            pa.row_to_col[static_cast<std::size_t>(i)] = j;
    }
    return pa;
}

SolveReport solve(const Instance& inst) {
    validate_instance(inst);
    if (inst.m() <= inst.n()) return solve_oriented(inst);
    SolveReport report = solve_oriented(transpose_instance(inst));
    report.assignment = report.assignment.flipped();
    report.transposed = true;
    return report;
}

std::vector<SolveReport> solve_batch(std::span<const Instance> instances) {
    std::vector<SolveReport> reports(instances.size());
    const int count = static_cast<int>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < count; ++i) reports[static_cast<std::size_t>(i)] = solve(instances[static_cast<std::size_t>(i)]);
    return reports;
}

std::vector<SolveReport> serial::solve_batch(std::span<const Instance> instances) {
    std::vector<SolveReport> reports(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) reports[i] = solve(instances[i]);
    return reports;
}

BalancedEmbedding build_balanced_embedding(const Instance& inst) {
    validate_instance(inst);
    const int m = inst.m();
    const int n = inst.n();
    BalancedEmbedding be;
    be.chat = Matrix(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n), 0.0);
    double offset = 0.0;
    for (double a : inst.alpha) offset += a;
    for (double b : inst.beta) offset += b;
    be.offset = inst.rho * offset;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            be.chat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                inst.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) -
                inst.rho * (inst.alpha[static_cast<std::size_t>(i)] + inst.beta[static_cast<std::size_t>(j)]);
    return be;
}

CrossCheck balanced_cross_check(const Instance& inst) {
    validate_instance(inst);
    if (inst.m() + inst.n() > 12) throw ValidationError("balanced cross-check limited to m + n <= 12");

    const BalancedEmbedding be = build_balanced_embedding(inst);
    const LapResult lap = solve_lap(be.chat);

    CrossCheck cc;
    cc.lhs = lap.value + be.offset;
    cc.rhs = solve(inst).total_cost;
    cc.ok = std::fabs(cc.lhs - cc.rhs) <= 1e-9;
    return cc;
}

}  // namespace popa
