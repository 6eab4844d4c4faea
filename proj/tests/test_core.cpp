#include <doctest.h>

#include <random>

#include "popa/core.hpp"
#include "support.hpp"

using namespace popa;

namespace {

Instance small_instance() {
    Instance inst;
    inst.cost = Matrix::from_rows({{0.1, 0.9}, {0.9, 0.1}});
    inst.alpha = {1.0, 1.0};
    inst.beta = {1.0, 1.0};
    inst.rho = 0.4;
    return inst;
}

}  // namespace

TEST_CASE("validate_instance accepts a well-formed instance") {
    const Instance inst = small_instance();
    CHECK_NOTHROW(validate_instance(inst));
}

TEST_CASE("validate_instance rejects invariant violations") {
    Instance inst = small_instance();

    SUBCASE("negative bias") {
        inst.alpha = {-1.0, 1.0};
        CHECK_THROWS_WITH_AS(validate_instance(inst), "negative bias", ValidationError);
    }
    SUBCASE("alpha length mismatch") {
        inst.alpha = {1.0};
        CHECK_THROWS_WITH_AS(validate_instance(inst), "dimension mismatch: alpha", ValidationError);
    }
    SUBCASE("beta length mismatch") {
        inst.beta = {1.0, 1.0, 1.0};
        CHECK_THROWS_WITH_AS(validate_instance(inst), "dimension mismatch: beta", ValidationError);
    }
    SUBCASE("non-finite cost") {
        inst.cost(0, 1) = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(validate_instance(inst), ValidationError);
    }
    SUBCASE("rho must be positive") {
        inst.rho = 0.0;
        CHECK_THROWS_AS(validate_instance(inst), ValidationError);
    }
    SUBCASE("duplicate source index in ground truth") {
        CHECK_THROWS_WITH_AS(PartialAssignment::from_pairs(2, 2, {{0, 0}, {0, 1}}), "duplicate source index",
                             ValidationError);
    }
    SUBCASE("duplicate target index in ground truth") {
        CHECK_THROWS_WITH_AS(PartialAssignment::from_pairs(2, 2, {{0, 0}, {1, 0}}), "duplicate target index",
                             ValidationError);
    }
    SUBCASE("ground truth out of range") {
        CHECK_THROWS_AS(PartialAssignment::from_pairs(2, 2, {{0, 2}}), ValidationError);
    }
}

TEST_CASE("total_cost on hand-checked cases") {
    Instance inst = small_instance();

    SUBCASE("empty assignment pays the full penalty") {
        CHECK(total_cost(inst, PartialAssignment::empty(2, 2)) == doctest::Approx(1.6).epsilon(1e-12));
    }
    SUBCASE("diagonal matching") {
        const auto pi = PartialAssignment::from_pairs(2, 2, {{0, 0}, {1, 1}});
        CHECK(total_cost(inst, pi) == doctest::Approx(0.2).epsilon(1e-12));
    }
    SUBCASE("single pair leaves one source and one target unmatched") {
        inst.cost = Matrix::from_rows({{0.1, 0.9}, {0.9, 0.9}});
        const auto pi = PartialAssignment::from_pairs(2, 2, {{0, 0}});
        CHECK(total_cost(inst, pi) == doctest::Approx(0.9).epsilon(1e-12));
    }
    SUBCASE("assignment dimension mismatch") {
        CHECK_THROWS_AS(total_cost(inst, PartialAssignment::empty(3, 2)), ValidationError);
    }
}

TEST_CASE("total_cost of the empty assignment is rho times the bias mass") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Instance inst = test::random_instance(rng, 4, 6);
        double mass = 0.0;
        for (double a : inst.alpha) mass += a;
        for (double b : inst.beta) mass += b;
        CHECK(total_cost(inst, PartialAssignment::empty(inst.m(), inst.n())) ==
              doctest::Approx(inst.rho * mass).epsilon(1e-12));
    }
}

TEST_CASE("total_cost is nonnegative for nonnegative costs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Instance inst = test::random_instance(rng, 4, 5);
        PartialAssignment pi = PartialAssignment::empty(inst.m(), inst.n());
        std::uniform_int_distribution<int> col(-1, inst.n() - 1);
        std::vector<char> used(static_cast<std::size_t>(inst.n()), 0);
        for (int i = 0; i < inst.m(); ++i) {
            const int j = col(rng);
            if (j >= 0 && !used[static_cast<std::size_t>(j)]) {
                pi.row_to_col[static_cast<std::size_t>(i)] = j;
                used[static_cast<std::size_t>(j)] = 1;
            }
        }
        CHECK(total_cost(inst, pi) >= 0.0);
    }
}

TEST_CASE("transpose_instance swaps roles and is an involution") {
    SUBCASE("shape and entries") {
        Instance inst;
        inst.cost = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
        inst.alpha = {0.1, 0.2, 0.3};
        inst.beta = {0.4, 0.5};
        inst.rho = 1.0;
        const Instance t = transpose_instance(inst);
        CHECK(t.m() == 2);
        CHECK(t.n() == 3);
        CHECK(t.cost(0, 2) == 5.0);
        CHECK(t.alpha == inst.beta);
        CHECK(t.beta == inst.alpha);
    }
    SUBCASE("involution and cost symmetry on random instances") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            Instance inst = test::random_instance(rng, 4, 5);
            inst.ground_truth = PartialAssignment::from_pairs(inst.m(), inst.n(), {{0, 0}});
            const Instance back = transpose_instance(transpose_instance(inst));
            CHECK(back.cost == inst.cost);
            CHECK(back.alpha == inst.alpha);
            CHECK(*back.ground_truth == *inst.ground_truth);

            const auto pi = PartialAssignment::from_pairs(inst.m(), inst.n(), {{0, 0}});
            CHECK(total_cost(inst, pi) ==
                  doctest::Approx(total_cost(transpose_instance(inst), pi.flipped())).epsilon(1e-12));
        }
    }
}
