#include <doctest.h>

#include <random>

#include "popa/core.hpp"
#include "popa/oracle.hpp"
#include "support.hpp"

using namespace popa;

TEST_CASE("count_partial_assignments closed form") {
    CHECK(count_partial_assignments(2, 2) == 7);
    CHECK(count_partial_assignments(2, 3) == 13);
    CHECK(count_partial_assignments(0, 5) == 1);
    CHECK(count_partial_assignments(5, 0) == 1);
    CHECK(count_partial_assignments(3, 4) == 73);
    CHECK(count_partial_assignments(4, 5) == 501);
}

TEST_CASE("count_partial_assignments overflows to an error") {
    CHECK_THROWS_AS(count_partial_assignments(30, 30), ValidationError);
}

TEST_CASE("enumeration visits exactly the counted candidates in documented order") {
    SUBCASE("count matches") {
        for (const auto [m, n] : {std::pair{2, 2}, std::pair{3, 4}, std::pair{4, 5}, std::pair{0, 3}}) {
            std::uint64_t seen = 0;
            for_each_partial_assignment(m, n, [&](const PartialAssignment&) { ++seen; });
            CHECK(seen == count_partial_assignments(m, n));
        }
    }
    SUBCASE("cardinality ascending, then lexicographic pairs") {
        std::vector<std::vector<std::pair<int, int>>> order;
        for_each_partial_assignment(2, 2, [&](const PartialAssignment& pa) { order.push_back(pa.pairs()); });
        const std::vector<std::vector<std::pair<int, int>>> expected = {
            {}, {{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
        CHECK(order == expected);
    }
}

TEST_CASE("brute_force_pgm on hand-checked cases") {
    SUBCASE("2x2 diagonal optimum") {
        Instance inst;
        inst.cost = Matrix::from_rows({{0.1, 0.9}, {0.9, 0.1}});
        inst.alpha = {1.0, 1.0};
        inst.beta = {1.0, 1.0};
        inst.rho = 0.4;
        const auto [pa, value] = brute_force_pgm(inst);
        CHECK(value == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(pa.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    }
    SUBCASE("matching too expensive, empty optimum") {
        Instance inst;
        inst.cost = Matrix::from_rows({{5.0}});
        inst.alpha = {1.0};
        inst.beta = {1.0};
        inst.rho = 1.0;
        const auto [pa, value] = brute_force_pgm(inst);
        CHECK(pa.matched_count() == 0);
        CHECK(value == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("no sources") {
        Instance inst;
        inst.cost = Matrix(0, 2);
        inst.alpha = {};
        inst.beta = {1.0, 1.0};
        inst.rho = 0.5;
        const auto [pa, value] = brute_force_pgm(inst);
        CHECK(pa.matched_count() == 0);
        CHECK(value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("brute_force_pgm value lower-bounds explicit assignments") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Instance inst = test::random_instance(rng, 3, 4);
        const auto [pa, value] = brute_force_pgm(inst);
        CHECK(value <= total_cost(inst, PartialAssignment::empty(inst.m(), inst.n())) + 1e-12);
        CHECK(value <= total_cost(inst, PartialAssignment::from_pairs(inst.m(), inst.n(), {{0, 0}})) + 1e-12);
    }
}

TEST_CASE("brute_force_pgm refuses oversized candidate spaces") {
    Instance inst;
    inst.cost = Matrix(10, 10, 0.5);  // |M| ~ 2.3e8 candidates
    inst.alpha.assign(10, 1.0);
    inst.beta.assign(10, 1.0);
    inst.rho = 0.4;
    CHECK_THROWS_AS(brute_force_pgm(inst), ValidationError);
}

TEST_CASE("brute_force_lap") {
    CHECK(brute_force_lap(Matrix::from_rows({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}})).second == 5.0);
    CHECK(brute_force_lap(Matrix::from_rows({{0, 1}, {1, 0}})).second == 0.0);
    const auto [perm, value] = brute_force_lap(Matrix::from_rows({{3}}));
    CHECK(perm.map == std::vector<int>{0});
    CHECK(value == 3.0);
    CHECK_THROWS_AS(brute_force_lap(Matrix(9, 9)), ValidationError);
}
