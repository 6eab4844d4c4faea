#include "popa/loss.hpp"

#include <cmath>
#include <cstddef>

#include "popa/core.hpp"
#include "popa/threads.hpp"

namespace popa {

namespace {

double clamp_cost(double c) {
    if (c < kLossClamp) return kLossClamp;
    if (c > 1.0 - kLossClamp) return 1.0 - kLossClamp;
    return c;
}

struct LossValues {
    double l_cost = 0.0;
    double l_bias = 0.0;
    double l_total = 0.0;
    long long active_pairs = 0;
};

// Shared unvalidated evaluator; the finite-difference driver calls this on
// perturbed copies. Row partials are combined in row order so the parallel
// kernel and the serial reference produce identical bits.
LossValues evaluate_values(const LossInputs& in, bool parallel) {
    const int m = static_cast<int>(in.cost.rows());
    const int n = static_cast<int>(in.cost.cols());
    const bool par = parallel && m >= 64;

    std::vector<double> row_loss(static_cast<std::size_t>(m), 0.0);
    std::vector<long long> row_active(static_cast<std::size_t>(m), 0);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (par)
    for (int i = 0; i < m; ++i) {
        const double* cost = in.cost.row(static_cast<std::size_t>(i));
        const double ai = in.alpha[static_cast<std::size_t>(i)];
        const int truth_col = in.truth.row_to_col[static_cast<std::size_t>(i)];
        double acc = 0.0;
        long long active = 0;
        for (int j = 0; j < n; ++j) {
            const bool is_match = truth_col == j;
            const bool feasible = cost[j] <= in.rho * (ai + in.beta[static_cast<std::size_t>(j)]);
            if (!is_match && !feasible) continue;
            ++active;
            const double c = clamp_cost(cost[j]);
            acc -= is_match ? std::log(1.0 - c) : std::log(c);
        }
        row_loss[static_cast<std::size_t>(i)] = acc;
        row_active[static_cast<std::size_t>(i)] = active;
    }

    LossValues out;
    for (int i = 0; i < m; ++i) {
        out.l_cost += row_loss[static_cast<std::size_t>(i)];
        out.active_pairs += row_active[static_cast<std::size_t>(i)];
    }

    std::vector<char> col_matched(static_cast<std::size_t>(n), 0);
    for (int j : in.truth.row_to_col)
        if (j >= 0) col_matched[static_cast<std::size_t>(j)] = 1;
    for (int i = 0; i < m; ++i) {
        if (in.truth.row_to_col[static_cast<std::size_t>(i)] < 0) continue;
        const double d = 1.0 - in.alpha[static_cast<std::size_t>(i)];
        out.l_bias += d * d;
    }
    for (int j = 0; j < n; ++j) {
        if (!col_matched[static_cast<std::size_t>(j)]) continue;
        const double d = 1.0 - in.beta[static_cast<std::size_t>(j)];
        out.l_bias += d * d;
    }
    out.l_total = out.l_cost + in.lambda * out.l_bias;
    return out;
}

LossReport gradients_impl(const LossInputs& in, bool parallel) {
    validate_loss_inputs(in);
    const int m = static_cast<int>(in.cost.rows());
    const int n = static_cast<int>(in.cost.cols());
    const bool par = parallel && m >= 64;

    const LossValues values = evaluate_values(in, parallel);
    LossReport report;
    report.l_cost = values.l_cost;
    report.l_bias = values.l_bias;
    report.l_total = values.l_total;
    report.active_pairs = values.active_pairs;

    report.grad_cost = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (par)
    for (int i = 0; i < m; ++i) {
        const double* cost = in.cost.row(static_cast<std::size_t>(i));
        double* grad = report.grad_cost.row(static_cast<std::size_t>(i));
        const double ai = in.alpha[static_cast<std::size_t>(i)];
        const int truth_col = in.truth.row_to_col[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const bool is_match = truth_col == j;
            const bool feasible = cost[j] <= in.rho * (ai + in.beta[static_cast<std::size_t>(j)]);
            if (!is_match && !feasible) continue;
            const double c = clamp_cost(cost[j]);
            grad[j] = is_match ? 1.0 / (1.0 - c) : -1.0 / c;
        }
    }

    std::vector<char> col_matched(static_cast<std::size_t>(n), 0);
    for (int j : in.truth.row_to_col)
        if (j >= 0) col_matched[static_cast<std::size_t>(j)] = 1;
    report.grad_alpha.assign(static_cast<std::size_t>(m), 0.0);
    report.grad_beta.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i)
        if (in.truth.row_to_col[static_cast<std::size_t>(i)] >= 0)
            report.grad_alpha[static_cast<std::size_t>(i)] = -2.0 * in.lambda * (1.0 - in.alpha[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
        if (col_matched[static_cast<std::size_t>(j)])
            report.grad_beta[static_cast<std::size_t>(j)] = -2.0 * in.lambda * (1.0 - in.beta[static_cast<std::size_t>(j)]);
    return report;
}

}  // namespace

void validate_loss_inputs(const LossInputs& in) {
    const int m = static_cast<int>(in.cost.rows());
    const int n = static_cast<int>(in.cost.cols());
    if (in.alpha.size() != static_cast<std::size_t>(m)) throw ValidationError("dimension mismatch: alpha");
    if (in.beta.size() != static_cast<std::size_t>(n)) throw ValidationError("dimension mismatch: beta");
    for (double c : in.cost.data()) {
        if (!std::isfinite(c)) throw ValidationError("non-finite cost entry");
        if (c < -1e-9 || c > 1.0 + 1e-9) throw ValidationError("cost entry outside [0, 1]");
    }
    auto check_bias = [](double b) {
        if (!std::isfinite(b) || b < 0.0 || b > 1.0) throw ValidationError("bias outside [0, 1]");
    };
    for (double a : in.alpha) check_bias(a);
    for (double b : in.beta) check_bias(b);
    if (!std::isfinite(in.rho) || in.rho <= 0.0) throw ValidationError("rho must be positive");
    if (!(in.lambda > 0.0 && in.lambda <= 1.0)) throw ValidationError("lambda must be in (0, 1]");
    validate_assignment(in.truth, m, n);
}

Mask attention_mask(const LossInputs& in) {
    validate_loss_inputs(in);
    const int m = static_cast<int>(in.cost.rows());
    const int n = static_cast<int>(in.cost.cols());
    Mask z(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        const int truth_col = in.truth.row_to_col[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const bool feasible = in.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) <=
                                  in.rho * (in.alpha[static_cast<std::size_t>(i)] + in.beta[static_cast<std::size_t>(j)]);
            z.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), truth_col == j || feasible);
        }
    }
    return z;
}

LossReport partial_matching_loss(const LossInputs& in) {
    validate_loss_inputs(in);
    const LossValues values = evaluate_values(in, true);
    LossReport report;
    report.l_cost = values.l_cost;
    report.l_bias = values.l_bias;
    report.l_total = values.l_total;
    report.active_pairs = values.active_pairs;
    return report;
}

LossReport loss_gradients(const LossInputs& in) { return gradients_impl(in, true); }

LossReport serial::loss_gradients(const LossInputs& in) { return gradients_impl(in, false); }

double finite_difference_check(const LossInputs& in, double h) {
    validate_loss_inputs(in);
    if (!(h >= 1e-7 && h <= 1e-4)) throw ValidationError("finite difference step outside [1e-7, 1e-4]");

    const int m = static_cast<int>(in.cost.rows());
    const int n = static_cast<int>(in.cost.cols());
    const double margin = 2.0 * h * (in.rho > 1.0 ? in.rho : 1.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const double c = in.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            const double threshold = in.rho * (in.alpha[static_cast<std::size_t>(i)] + in.beta[static_cast<std::size_t>(j)]);
            if (c <= margin || 1.0 - c <= margin || std::fabs(c - threshold) <= margin)
                throw ValidationError("cost entry near kink; reduce h or move the entry");
        }
    }

    const LossReport analytic = loss_gradients(in);
    LossInputs work = in;
    double max_rel = 0.0;
    auto probe = [&](double* coord, double grad) {
        const double saved = *coord;
        *coord = saved + h;
        const double up = evaluate_values(work, true).l_total;
        *coord = saved - h;
        const double down = evaluate_values(work, true).l_total;
        *coord = saved;
        const double fd = (up - down) / (2.0 * h);
        double denom = 1.0;
        if (std::fabs(grad) > denom) denom = std::fabs(grad);
        if (std::fabs(fd) > denom) denom = std::fabs(fd);
        const double rel = std::fabs(fd - grad) / denom;
        max_rel = rel > max_rel ? rel : max_rel;
    };

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            probe(&work.cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                  analytic.grad_cost(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    for (int i = 0; i < m; ++i) probe(&work.alpha[static_cast<std::size_t>(i)], analytic.grad_alpha[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) probe(&work.beta[static_cast<std::size_t>(j)], analytic.grad_beta[static_cast<std::size_t>(j)]);
    return max_rel;
}

}  // namespace popa
