#include "popa/core.hpp"

#include <cmath>
#include <cstddef>

namespace popa {

PartialAssignment PartialAssignment::from_pairs(int m, int n, const std::vector<std::pair<int, int>>& pairs) {
    if (m < 0 || n < 0) throw ValidationError("negative dimension");
    PartialAssignment pa = empty(m, n);
    std::vector<char> col_used(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= m) throw ValidationError("source index out of range");
        if (j < 0 || j >= n) throw ValidationError("target index out of range");
        if (pa.row_to_col[static_cast<std::size_t>(i)] != -1) throw ValidationError("duplicate source index");
        if (col_used[static_cast<std::size_t>(j)]) throw ValidationError("duplicate target index");
        pa.row_to_col[static_cast<std::size_t>(i)] = j;
        col_used[static_cast<std::size_t>(j)] = 1;
    }
    return pa;
}

void validate_assignment(const PartialAssignment& pa, int m, int n) {
    if (pa.m != m || pa.n != n) throw ValidationError("dimension mismatch: assignment");
    if (pa.row_to_col.size() != static_cast<std::size_t>(m)) throw ValidationError("dimension mismatch: assignment rows");
    std::vector<char> col_used(static_cast<std::size_t>(n), 0);
    for (int j : pa.row_to_col) {
        if (j == -1) continue;
        if (j < 0 || j >= n) throw ValidationError("target index out of range");
        if (col_used[static_cast<std::size_t>(j)]) throw ValidationError("duplicate target index");
        col_used[static_cast<std::size_t>(j)] = 1;
    }
}

const Instance& validate_instance(const Instance& inst) {
    const int m = inst.m();
    const int n = inst.n();
    if (inst.alpha.size() != static_cast<std::size_t>(m)) throw ValidationError("dimension mismatch: alpha");
    if (inst.beta.size() != static_cast<std::size_t>(n)) throw ValidationError("dimension mismatch: beta");
    for (double c : inst.cost.data())
        if (!std::isfinite(c)) throw ValidationError("non-finite cost entry");
    for (double a : inst.alpha) {
        if (!std::isfinite(a)) throw ValidationError("non-finite bias");
        if (a < 0.0) throw ValidationError("negative bias");
    }
    for (double b : inst.beta) {
        if (!std::isfinite(b)) throw ValidationError("non-finite bias");
        if (b < 0.0) throw ValidationError("negative bias");
    }
    if (!std::isfinite(inst.rho) || inst.rho <= 0.0) throw ValidationError("rho must be positive");
    if (inst.ground_truth) validate_assignment(*inst.ground_truth, m, n);
    return inst;
}

double transported_cost(const Instance& inst, const PartialAssignment& pi) {
    validate_assignment(pi, inst.m(), inst.n());
    double t = 0.0;
    for (int i = 0; i < pi.m; ++i) {
        int j = pi.row_to_col[static_cast<std::size_t>(i)];
        if (j >= 0) t += inst.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    return t;
}

double unmatched_mass(const Instance& inst, const PartialAssignment& pi) {
    double mass = 0.0;
    for (int i = 0; i < pi.m; ++i)
        if (pi.row_to_col[static_cast<std::size_t>(i)] < 0) mass += inst.alpha[static_cast<std::size_t>(i)];
    std::vector<char> col_used(static_cast<std::size_t>(pi.n), 0);
    for (int j : pi.row_to_col)
        if (j >= 0) col_used[static_cast<std::size_t>(j)] = 1;
    for (int j = 0; j < pi.n; ++j)
        if (!col_used[static_cast<std::size_t>(j)]) mass += inst.beta[static_cast<std::size_t>(j)];
    return mass;
}

double total_cost(const Instance& inst, const PartialAssignment& pi) {
    return transported_cost(inst, pi) + inst.rho * unmatched_mass(inst, pi);
}

Instance transpose_instance(const Instance& inst) {
    Instance t;
    t.cost = inst.cost.transposed();
    t.alpha = inst.beta;
    t.beta = inst.alpha;
    t.rho = inst.rho;
    if (inst.ground_truth) t.ground_truth = inst.ground_truth->flipped();
    return t;
}

}  // namespace popa
