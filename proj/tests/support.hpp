#pragma once

#include <random>

#include "popa/types.hpp"

namespace popa::test {

// Random instance in the regime the oracle can verify: C ~ U[0,1],
// biases ~ U[0,1], rho on the 0.1..1.0 grid.
inline Instance random_instance(std::mt19937_64& rng, int max_m, int max_n, bool unit_biases = false) {
    std::uniform_int_distribution<int> pick_m(1, max_m);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_n(m, max_n);
    const int n = pick_n(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_rho(1, 10);

    Instance inst;
    inst.cost = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (double& c : inst.cost.data()) c = unit(rng);
    if (unit_biases) {
        inst.alpha.assign(static_cast<std::size_t>(m), 1.0);
        inst.beta.assign(static_cast<std::size_t>(n), 1.0);
    } else {
        inst.alpha.resize(static_cast<std::size_t>(m));
        inst.beta.resize(static_cast<std::size_t>(n));
        for (double& a : inst.alpha) a = unit(rng);
        for (double& b : inst.beta) b = unit(rng);
    }
    inst.rho = pick_rho(rng) / 10.0;
    return inst;
}

inline Matrix random_square(std::mt19937_64& rng, int n, double lo = 0.0, double hi = 1.0) {
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::uniform_real_distribution<double> dist(lo, hi);
    for (double& v : m.data()) v = dist(rng);
    return m;
}

}  // namespace popa::test
