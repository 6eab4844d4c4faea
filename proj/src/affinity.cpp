#include "popa/affinity.hpp"

#include <cmath>
#include <cstddef>

#include "popa/threads.hpp"
#include "popa/types.hpp"

namespace popa {

namespace {

// One shared implementation; the OpenMP if-clause turns the serial reference
// and the parallel kernel into the same code path, so results are identical
// bit for bit (every sum is accumulated in a fixed order within its row or
// column).
SinkhornResult sinkhorn_impl(const Matrix& affinity, const SinkhornConfig& cfg, bool parallel) {
    const int m = static_cast<int>(affinity.rows());
    const int n = static_cast<int>(affinity.cols());
    if (m > n) throw ValidationError("sinkhorn requires m <= n");
    if (cfg.tau <= 0.0) throw ValidationError("tau must be positive");
    if (cfg.max_iters <= 0) throw ValidationError("max_iters must be positive");
    if (cfg.tol <= 0.0) throw ValidationError("tol must be positive");
    for (double a : affinity.data())
        if (!std::isfinite(a)) throw ValidationError("non-finite affinity entry");

    const bool par = parallel && n >= 64;
    const int threads = thread_count();
    Matrix k(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 1.0);  // dummy rows stay uniform

#pragma omp parallel for schedule(static) num_threads(threads) if (par)
    for (int i = 0; i < m; ++i) {
        const double* in = affinity.row(static_cast<std::size_t>(i));
        double* out = k.row(static_cast<std::size_t>(i));
        double row_max = in[0];
        for (int j = 1; j < n; ++j) row_max = in[j] > row_max ? in[j] : row_max;
        for (int j = 0; j < n; ++j) out[j] = std::exp((in[j] - row_max) / cfg.tau);
    }

    SinkhornResult res;
    std::vector<double> col_sum(static_cast<std::size_t>(n), 0.0);
    std::vector<double> row_sum(static_cast<std::size_t>(n), 0.0);
    double residual = n > 0 ? 1.0 : 0.0;
    int it = 0;
    while (it < cfg.max_iters) {
        ++it;
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
        for (int i = 0; i < n; ++i) {
            double* row = k.row(static_cast<std::size_t>(i));
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += row[j];
            if (s > 0.0)
                for (int j = 0; j < n; ++j) row[j] /= s;
        }
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += k(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            col_sum[static_cast<std::size_t>(j)] = s;
        }
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
        for (int i = 0; i < n; ++i) {
            double* row = k.row(static_cast<std::size_t>(i));
            double s = 0.0;
            for (int j = 0; j < n; ++j) {
                if (col_sum[static_cast<std::size_t>(j)] > 0.0) row[j] /= col_sum[static_cast<std::size_t>(j)];
                s += row[j];
            }
            row_sum[static_cast<std::size_t>(i)] = s;
        }
        residual = 0.0;  // columns are exact after the column pass; rows carry the error
        for (int i = 0; i < n; ++i) {
            const double dev = std::fabs(row_sum[static_cast<std::size_t>(i)] - 1.0);
            residual = dev > residual ? dev : residual;
        }
        if (residual <= cfg.tol) break;
    }

    res.iterations = it;
    res.residual = residual;
    res.converged = residual <= cfg.tol;
    res.s = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(threads) if (par)
    for (int i = 0; i < m; ++i) {
        const double* in = k.row(static_cast<std::size_t>(i));
        double* out = res.s.row(static_cast<std::size_t>(i));
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += in[j];
        for (int j = 0; j < n; ++j) out[j] = s > 0.0 ? in[j] / s : 0.0;
    }
    return res;
}

}  // namespace

SinkhornResult sinkhorn_normalize(const Matrix& affinity, const SinkhornConfig& cfg) {
    return sinkhorn_impl(affinity, cfg, true);
}

SinkhornResult serial::sinkhorn_normalize(const Matrix& affinity, const SinkhornConfig& cfg) {
    return sinkhorn_impl(affinity, cfg, false);
}

Matrix cost_from_affinity(const Matrix& s) {
    Matrix c(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j) {
            const double v = s(i, j);
            if (!(v >= -1e-9 && v <= 1.0 + 1e-9)) throw ValidationError("affinity score outside [0, 1]");
            c(i, j) = 1.0 - v;
        }
    }
    return c;
}

std::pair<std::vector<double>, std::vector<double>> matching_biases(const Matrix& affinity, double w_rs) {
    if (!std::isfinite(w_rs) || w_rs < 0.0) throw ValidationError("w_rs must be nonnegative");
    for (double a : affinity.data())
        if (!std::isfinite(a)) throw ValidationError("non-finite affinity entry");

    const std::size_t m = affinity.rows();
    const std::size_t n = affinity.cols();
    std::vector<double> row_max(m, 0.0);
    std::vector<double> col_max(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = affinity(i, j) > 0.0 ? affinity(i, j) : 0.0;
            if (v > row_max[i]) row_max[i] = v;
            if (v > col_max[j]) col_max[j] = v;
        }
    }
    auto bias = [w_rs](double r) {
        const double sig = 1.0 / (1.0 + std::exp(-w_rs * r));
        return 2.0 * (sig - 0.5);
    };
    std::vector<double> alpha(m), beta(n);
    for (std::size_t i = 0; i < m; ++i) alpha[i] = bias(row_max[i]);
    for (std::size_t j = 0; j < n; ++j) beta[j] = bias(col_max[j]);
    return {alpha, beta};
}

}  // namespace popa
