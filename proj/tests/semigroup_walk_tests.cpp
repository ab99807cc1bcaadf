#include <vector>

#include "doctest.h"
#include "magma/core.hpp"
#include "magma/errors.hpp"
#include "magma/oracle.hpp"
#include "magma/semigroup_walk.hpp"

using namespace magma;

namespace {

// All zeros except u.1 = 1; the unique violating triple is (u, u, 1).
MagmaTable single_witness(int n, Element u) {
    std::vector<Element> entries(static_cast<std::size_t>(n) * n, 0);
    entries[static_cast<std::size_t>(u) * n + 1] = 1;
    return MagmaTable(n, entries);
}

MagmaTable constant_zero(int n) {
    return MagmaTable(n, std::vector<Element>(static_cast<std::size_t>(n) * n, 0));
}

}  // namespace

TEST_CASE("guaranteed marked fraction") {
    CHECK(epsilon_lower_bound(6, 1, 3) == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(epsilon_lower_bound(6, 2, 3) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(epsilon_lower_bound(6, 2, 2) == 0.0);
    CHECK(epsilon_lower_bound(6, 2, 1) == 0.0);
    CHECK_THROWS_AS(epsilon_lower_bound(6, 0, 3), ParameterViolation);
    CHECK_THROWS_AS(epsilon_lower_bound(6, 6, 3), ParameterViolation);
    CHECK_THROWS_AS(epsilon_lower_bound(6, 2, 0), ParameterViolation);
    CHECK_THROWS_AS(epsilon_lower_bound(6, 2, 5), ParameterViolation);
}

TEST_CASE("exhaustive marked fraction on the single-witness table") {
    // pairs (A, B) of 3-subsets of {2..5} are marked exactly when u lies on
    // both sides, 9 of the 16 pairs
    const auto table = single_witness(6, 3);
    const auto result = semigroup_marked_fraction(table, 3);
    CHECK(result.total == 16);
    CHECK(result.marked == 9);
    CHECK(result.epsilon == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
    CHECK(result.epsilon >= epsilon_lower_bound(6, 2, 3));
}

TEST_CASE("marked fraction of an associative table is zero") {
    const auto result = semigroup_marked_fraction(constant_zero(6), 3);
    CHECK(result.marked == 0);
    CHECK(result.total == 100);
    CHECK(result.epsilon == 0.0);
}

TEST_CASE("marked fraction guards") {
    CHECK_THROWS_AS(semigroup_marked_fraction(single_witness(12, 4), 5, 100), CombinatorialBlowup);
    CHECK_THROWS_AS(semigroup_marked_fraction(single_witness(6, 3), 0), ParameterViolation);
    CHECK_THROWS_AS(semigroup_marked_fraction(single_witness(6, 3), 5), ParameterViolation);
    // a table whose codomain is everything leaves nothing to walk over
    std::vector<Element> perm = {1, 0, 0, 1};
    CHECK_THROWS_AS(semigroup_marked_fraction(MagmaTable(2, perm), 1), ParameterViolation);
}

TEST_CASE("database setup fetches the full grid") {
    const auto table = single_witness(6, 3);
    CountingOracle oracle(table);
    WalkDatabase db(oracle, {2, 3}, {3, 4});
    CHECK(db.rows() == std::vector<Element>{0, 1, 2, 3});
    CHECK(db.cols() == std::vector<Element>{0, 1, 3, 4});
    CHECK(db.queries() == 16);
    CHECK(db.known(0, 0));
    CHECK(db.known(3, 4));
    CHECK_FALSE(db.known(5, 5));
    CHECK(db.read(3, 1) == 1);
    CHECK(db.queries() == 16);
    CHECK(db.verify_against(table));
}

TEST_CASE("exchanges refetch one row or column") {
    const auto table = single_witness(6, 3);
    CountingOracle oracle(table);
    WalkDatabase db(oracle, {2, 3}, {3, 4});
    db.exchange_a(2, 5);
    CHECK(db.a_side() == std::vector<Element>{5, 3});
    CHECK(db.rows() == std::vector<Element>{0, 1, 3, 5});
    CHECK(db.queries() == 20);
    db.exchange_b(4, 2);
    CHECK(db.cols() == std::vector<Element>{0, 1, 2, 3});
    CHECK(db.queries() == 24);

    const auto witness = db.find_violation();
    REQUIRE(witness.has_value());
    CHECK(*witness == std::array<Element, 3>{3, 3, 1});
    CHECK(db.verify_against(table));

    auto wrong = table.entries();
    wrong[0] = 2;
    CHECK_FALSE(db.verify_against(MagmaTable(6, wrong)));
}

TEST_CASE("a violation needs the witness on both sides") {
    const auto table = single_witness(6, 3);
    CountingOracle oracle(table);
    WalkDatabase db(oracle, {2, 3}, {4, 5});
    CHECK_FALSE(db.find_violation().has_value());
}

TEST_CASE("database argument validation") {
    const auto table = single_witness(6, 3);
    CountingOracle oracle(table);
    CHECK_THROWS_AS(WalkDatabase(oracle, {0, 2}, {3, 4}), ParameterViolation);
    CHECK_THROWS_AS(WalkDatabase(oracle, {2, 2}, {3, 4}), ParameterViolation);
    CHECK_THROWS_AS(WalkDatabase(oracle, {}, {3, 4}), ParameterViolation);
    CHECK_THROWS_AS(WalkDatabase(oracle, {2, 6}, {3, 4}), ParameterViolation);

    WalkDatabase db(oracle, {2, 3}, {3, 4});
    CHECK_THROWS_AS(db.exchange_a(4, 5), ParameterViolation);
    CHECK_THROWS_AS(db.exchange_a(2, 3), ParameterViolation);
    CHECK_THROWS_AS(db.exchange_a(2, 1), ParameterViolation);
    CHECK_THROWS_AS(db.read(-1, 0), ParameterViolation);
    CHECK_THROWS_AS(db.read(0, 6), ParameterViolation);
}

TEST_CASE("walk emulation finds the planted violation most of the time") {
    const auto table = single_witness(12, 4);
    int hits = 0;
    const int runs = 40;
    for (std::uint64_t seed = 0; seed < runs; ++seed) {
        CountingOracle oracle(table);
        const auto result = semigroup_walk_emulation(oracle, 5, seed);
        CHECK(result.step_budget == 28);
        CHECK(result.delta == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(result.eps_bound == doctest::Approx(0.09).epsilon(1e-12));
        CHECK(result.queries == oracle.count());
        // charges: setup 49, update 7, check 16
        CHECK(result.charged_cost ==
              doctest::Approx(65.0 + 23.0 * result.steps_taken).epsilon(1e-12));
        CHECK(result.quantum_cost ==
              doctest::Approx(mnrs_cost({49.0, 7.0, 16.0}, 0.4, 0.09)).epsilon(1e-12));
        if (result.violation_found) {
            CHECK(result.witness == std::array<Element, 3>{4, 4, 1});
            CHECK(result.steps_taken <= result.step_budget);
            ++hits;
        } else {
            CHECK(result.steps_taken == result.step_budget);
        }
    }
    CHECK(hits >= runs / 2);
}

TEST_CASE("walk emulation walks the full budget on an associative table") {
    const auto table = constant_zero(8);
    CountingOracle oracle(table);
    const auto result = semigroup_walk_emulation(oracle, 3, 11);
    CHECK_FALSE(result.violation_found);
    CHECK(result.step_budget == 21);
    CHECK(result.steps_taken == 21);
}

TEST_CASE("walk emulation parameter validation") {
    const auto table = single_witness(12, 4);
    CountingOracle oracle(table);
    CHECK_THROWS_AS(semigroup_walk_emulation(oracle, 4, 0), ParameterViolation);
    const auto tiny = constant_zero(4);
    CountingOracle small(tiny);
    CHECK_THROWS_AS(semigroup_walk_emulation(small, 3, 0), ParameterViolation);
}
