#include <doctest.h>

#include <random>

#include "popa/lap.hpp"
#include "popa/oracle.hpp"
#include "support.hpp"

using namespace popa;

TEST_CASE("solve_lap on hand-checked matrices") {
    SUBCASE("zero diagonal") {
        const LapResult r = solve_lap(Matrix::from_rows({{0, 1}, {1, 0}}));
        CHECK(r.perm.map == std::vector<int>{0, 1});
        CHECK(r.value == 0.0);
    }
    SUBCASE("3x3 with known optimum 5") {
        const LapResult r = solve_lap(Matrix::from_rows({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}}));
        CHECK(r.value == 5.0);
        CHECK(r.perm.map == std::vector<int>{1, 0, 2});
    }
    SUBCASE("single cell") {
        const LapResult r = solve_lap(Matrix::from_rows({{7}}));
        CHECK(r.perm.map == std::vector<int>{0});
        CHECK(r.value == 7.0);
    }
    SUBCASE("empty input") {
        const LapResult r = solve_lap(Matrix());
        CHECK(r.perm.size() == 0);
        CHECK(r.value == 0.0);
    }
}

TEST_CASE("solve_lap input validation") {
    CHECK_THROWS_AS(solve_lap(Matrix(2, 3)), ValidationError);
    Matrix bad(2, 2);
    bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(solve_lap(bad), ValidationError);
}

TEST_CASE("solve_lap matches exhaustive enumeration") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> pick_n(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const Matrix cost = test::random_square(rng, pick_n(rng));
        const LapResult fast = solve_lap(cost);
        const auto [perm, value] = brute_force_lap(cost);
        CHECK(fast.value == value);
    }
}

TEST_CASE("row and column shifts move the objective by the shift") {
    // integer-valued costs keep every sum exact
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> entry(0, 20);
    std::uniform_int_distribution<int> pick_n(2, 6);
    std::uniform_int_distribution<int> shift(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = pick_n(rng);
        Matrix cost(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (double& c : cost.data()) c = entry(rng);
        const LapResult base = solve_lap(cost);

        Matrix shifted = cost;
        const double delta = shift(rng);
        std::uniform_int_distribution<int> pick_index(0, n - 1);
        if (trial % 2 == 0) {
            const int i = pick_index(rng);
            for (int j = 0; j < n; ++j) shifted(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += delta;
        } else {
            const int j = pick_index(rng);
            for (int i = 0; i < n; ++i) shifted(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += delta;
        }
        const LapResult moved = solve_lap(shifted);
        CHECK(moved.value == base.value + delta);

        // the returned permutation stays optimal for the shifted matrix
        double perm_cost = 0.0;
        for (int i = 0; i < n; ++i)
            perm_cost += shifted(static_cast<std::size_t>(i), static_cast<std::size_t>(moved.perm.map[static_cast<std::size_t>(i)]));
        const auto [oracle_perm, oracle_value] = brute_force_lap(shifted);
        CHECK(perm_cost == oracle_value);
    }
}

TEST_CASE("ties resolve deterministically to low column indices") {
    const LapResult flat = solve_lap(Matrix(3, 3, 1.0));
    CHECK(flat.perm.map == std::vector<int>{0, 1, 2});

    const LapResult repeat = solve_lap(Matrix(3, 3, 1.0));
    CHECK(flat.perm.map == repeat.perm.map);
}
