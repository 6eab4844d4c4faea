#include "popa/metrics.hpp"

#include <cstddef>

#include "popa/core.hpp"

namespace popa {

namespace {

void check_dims(const PartialAssignment& pred, const PartialAssignment& truth) {
    if (pred.m != truth.m || pred.n != truth.n) throw ValidationError("dimension mismatch: prediction vs truth");
}

int intersection_size(const PartialAssignment& pred, const PartialAssignment& truth) {
    int hits = 0;
    for (int i = 0; i < truth.m; ++i) {
        const int j = truth.row_to_col[static_cast<std::size_t>(i)];
        if (j >= 0 && pred.row_to_col[static_cast<std::size_t>(i)] == j) ++hits;
    }
    return hits;
}

}  // namespace

F1Score match_f1(const PartialAssignment& pred, const PartialAssignment& truth) {
    check_dims(pred, truth);
    const int truth_size = truth.matched_count();
    if (truth_size == 0) throw ValidationError("undefined recall: ground truth has no matches");

    const int pred_size = pred.matched_count();
    const int hits = intersection_size(pred, truth);
    F1Score s;
    s.precision = pred_size > 0 ? static_cast<double>(hits) / pred_size : 0.0;
    s.recall = static_cast<double>(hits) / truth_size;
    s.f1 = (s.precision + s.recall) > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
    return s;
}

double node_correctness(const PartialAssignment& pred, const PartialAssignment& truth) {
    check_dims(pred, truth);
    const int truth_size = truth.matched_count();
    if (truth_size == 0) throw ValidationError("undefined node correctness: ground truth has no matches");
    return static_cast<double>(intersection_size(pred, truth)) / truth_size;
}

ErrorSplit error_decomposition(const PartialAssignment& pred, const PartialAssignment& truth, const Instance& inst) {
    check_dims(pred, truth);
    validate_instance(inst);
    if (truth.m != inst.m() || truth.n != inst.n()) throw ValidationError("dimension mismatch: truth vs instance");
    const int truth_size = truth.matched_count();
    if (truth_size == 0) throw ValidationError("undefined error decomposition: ground truth has no matches");

    int infeasible = 0;
    int feasible_missed = 0;
    for (int i = 0; i < truth.m; ++i) {
        const int j = truth.row_to_col[static_cast<std::size_t>(i)];
        if (j < 0) continue;
        const double threshold = inst.rho * (inst.alpha[static_cast<std::size_t>(i)] + inst.beta[static_cast<std::size_t>(j)]);
        if (inst.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) > threshold) {
            ++infeasible;
        } else if (pred.row_to_col[static_cast<std::size_t>(i)] != j) {
            ++feasible_missed;
        }
    }
    ErrorSplit e;
    e.partiality = static_cast<double>(infeasible) / truth_size;
    e.mismatching = static_cast<double>(feasible_missed) / truth_size;
    e.total = e.partiality + e.mismatching;
    return e;
}

MatchMetrics evaluate_against_truth(const PartialAssignment& pred, const Instance& inst) {
    if (!inst.ground_truth) throw ValidationError("instance has no ground truth");
    const PartialAssignment& truth = *inst.ground_truth;
    const F1Score f1 = match_f1(pred, truth);
    const ErrorSplit errors = error_decomposition(pred, truth, inst);
    MatchMetrics m;
    m.precision = f1.precision;
    m.recall = f1.recall;
    m.f1 = f1.f1;
    m.node_correctness = node_correctness(pred, truth);
    m.partiality_error = errors.partiality;
    m.mismatching_error = errors.mismatching;
    m.total_error = errors.total;
    return m;
}

}  // namespace popa
