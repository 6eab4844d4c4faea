#include "popa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "popa/core.hpp"

namespace popa {

namespace {

constexpr std::uint64_t kCountBound = std::numeric_limits<std::int64_t>::max();

// Multiplies into acc, throwing once the running value leaves [0, 2^63-1].
std::uint64_t checked_mul(std::uint64_t acc, std::uint64_t factor) {
    if (factor != 0 && acc > kCountBound / factor) throw ValidationError("partial assignment count overflow");
    return acc * factor;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > kCountBound - b) throw ValidationError("partial assignment count overflow");
    return a + b;
}

// C(n, k) with the same overflow guard.
std::uint64_t checked_binomial(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: c holds C(n - k + i - 1, i - 1) * ... pattern,
        // multiply-then-divide keeps integrality
        c = checked_mul(c, static_cast<std::uint64_t>(n - k + i));
        c /= static_cast<std::uint64_t>(i);
    }
    return c;
}

struct Enumerator {
    int m, n;
    const std::function<void(const PartialAssignment&)>* visit;
    PartialAssignment scratch;
    std::vector<char> col_used;

    // Assigns targets to sources[from..] (ascending source order, ascending
    // target order) which yields lexicographic pair lists.
    void assign(const std::vector<int>& sources, std::size_t from) {
        if (from == sources.size()) {
            (*visit)(scratch);
            return;
        }
        const int i = sources[from];
        for (int j = 0; j < n; ++j) {
            if (col_used[static_cast<std::size_t>(j)]) continue;
            col_used[static_cast<std::size_t>(j)] = 1;
            scratch.row_to_col[static_cast<std::size_t>(i)] = j;
            assign(sources, from + 1);
            scratch.row_to_col[static_cast<std::size_t>(i)] = -1;
            col_used[static_cast<std::size_t>(j)] = 0;
        }
    }

    void choose_sources(std::vector<int>& sources, int next, int k) {
        if (static_cast<int>(sources.size()) == k) {
            assign(sources, 0);
            return;
        }
        for (int i = next; i <= m - (k - static_cast<int>(sources.size())); ++i) {
            sources.push_back(i);
            choose_sources(sources, i + 1, k);
            sources.pop_back();
        }
    }
};

}  // namespace

std::uint64_t count_partial_assignments(int m, int n) {
    if (m < 0 || n < 0) throw ValidationError("negative dimension");
    std::uint64_t total = 0;
    const int kmax = std::min(m, n);
    for (int k = 0; k <= kmax; ++k) {
        std::uint64_t term = checked_binomial(m, k);
        term = checked_mul(term, checked_binomial(n, k));
        for (int f = 2; f <= k; ++f) term = checked_mul(term, static_cast<std::uint64_t>(f));
        total = checked_add(total, term);
    }
    return total;
}

void for_each_partial_assignment(int m, int n, const std::function<void(const PartialAssignment&)>& visit) {
    Enumerator e;
    e.m = m;
    e.n = n;
    e.visit = &visit;
    e.scratch = PartialAssignment::empty(m, n);
    e.col_used.assign(static_cast<std::size_t>(n), 0);
    const int kmax = std::min(m, n);
    std::vector<int> sources;
    for (int k = 0; k <= kmax; ++k) e.choose_sources(sources, 0, k);
}

std::pair<PartialAssignment, double> brute_force_pgm(const Instance& inst) {
    validate_instance(inst);
    if (count_partial_assignments(inst.m(), inst.n()) > 10'000'000ULL)
        throw ValidationError("instance too large for brute force enumeration");

    PartialAssignment best;
    double best_value = std::numeric_limits<double>::infinity();
    for_each_partial_assignment(inst.m(), inst.n(), [&](const PartialAssignment& pa) {
        const double value = total_cost(inst, pa);
        if (value < best_value) {
            best_value = value;
            best = pa;
        }
    });
    return {best, best_value};
}

std::pair<Permutation, double> brute_force_lap(const Matrix& cost) {
    if (cost.rows() != cost.cols()) throw ValidationError("LAP cost matrix must be square");
    const int n = static_cast<int>(cost.rows());
    if (n > 8) throw ValidationError("brute force LAP limited to n <= 8");
    for (double c : cost.data())
        if (!std::isfinite(c)) throw ValidationError("non-finite cost entry");

    Permutation perm = Permutation::identity(n);
    Permutation best = perm;
    double best_value = std::numeric_limits<double>::infinity();
    if (n == 0) return {best, 0.0};
    do {
        double value = 0.0;
        for (int i = 0; i < n; ++i) value += cost(static_cast<std::size_t>(i), static_cast<std::size_t>(perm.map[static_cast<std::size_t>(i)]));
        if (value < best_value) {
            best_value = value;
            best = perm;
        }
    } while (std::next_permutation(perm.map.begin(), perm.map.end()));
    return {best, best_value};
}

}  // namespace popa
