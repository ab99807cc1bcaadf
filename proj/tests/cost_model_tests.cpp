#include <cmath>
#include <string>

#include "doctest.h"
#include "magma/cost_model.hpp"
#include "magma/errors.hpp"

using namespace magma;

TEST_CASE("walk cost formula") {
    CHECK(mnrs_cost({4.0, 2.0, 3.0}, 0.25, 0.25) == doctest::Approx(18.0).epsilon(1e-12));
    CHECK(mnrs_cost({0.0, 0.0, 1.0}, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(mnrs_cost({1, 1, 1}, 0.0, 0.5), ParameterViolation);
    CHECK_THROWS_AS(mnrs_cost({1, 1, 1}, 0.5, 0.0), ParameterViolation);
    CHECK_THROWS_AS(mnrs_cost({1, 1, 1}, 0.5, 1.5), ParameterViolation);
    CHECK_THROWS_AS(mnrs_cost({-1, 1, 1}, 0.5, 0.5), ParameterViolation);
}

TEST_CASE("associativity walk exponent by codomain regime") {
    const auto tiny = semigroup_exponent(0.0);
    CHECK(tiny.beta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tiny.exponent == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(tiny.regime == CostRegime::SmallCodomain);
    CHECK_FALSE(tiny.log_factor);

    const auto edge = semigroup_exponent(1.0 / 6.0);
    CHECK(edge.exponent == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(edge.regime == CostRegime::SmallCodomain);

    const auto mid = semigroup_exponent(0.2);
    CHECK(mid.beta == doctest::Approx(0.68).epsilon(1e-9));
    CHECK(mid.exponent == doctest::Approx(1.36).epsilon(1e-9));
    CHECK(mid.regime == CostRegime::MidCodomain);

    const auto upper = semigroup_exponent(3.0 / 8.0);
    CHECK(upper.exponent == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(upper.regime == CostRegime::MidCodomain);

    const auto large = semigroup_exponent(0.5);
    CHECK(large.exponent == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(large.regime == CostRegime::GroverFallback);
    CHECK(large.beta == 0.0);

    CHECK_THROWS_AS(semigroup_exponent(-0.1), ParameterViolation);
    CHECK_THROWS_AS(semigroup_exponent(1.1), ParameterViolation);
}

TEST_CASE("exponent is monotone in the codomain exponent") {
    double prev = 0.0;
    for (double alpha = 0.0; alpha <= 1.0; alpha += 0.05) {
        const double e = semigroup_exponent(alpha).exponent;
        CHECK(e >= prev - 1e-12);
        CHECK(e <= 1.5 + 1e-12);
        prev = e;
    }
}

TEST_CASE("concrete walk cost") {
    const double expected = mnrs_cost({49.0, 7.0, 2.0 * std::sqrt(60.0)}, 0.4, 0.09);
    CHECK(semigroup_cost(12, 2, 5) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(semigroup_cost(100, 1, 10) > 0.0);
    CHECK_THROWS_AS(semigroup_cost(12, 0, 5), ParameterViolation);
    CHECK_THROWS_AS(semigroup_cost(12, 2, 2), ParameterViolation);
    CHECK_THROWS_AS(semigroup_cost(12, 2, 10), ParameterViolation);
}

TEST_CASE("two-phase classical cost and its optimum") {
    CHECK(group_randomized_cost(16, 4) == doctest::Approx(128.0).epsilon(1e-12));
    CHECK(group_randomized_cost(16, 1) == doctest::Approx(272.0).epsilon(1e-12));
    const auto opt = group_randomized_optimum(16);
    CHECK(opt.r == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(opt.cost == doctest::Approx(128.0).epsilon(1e-12));
    for (int r = 1; r <= 16; ++r) CHECK(group_randomized_cost(16, r) >= opt.cost - 1e-9);
    CHECK_THROWS_AS(group_randomized_cost(16, 0), ParameterViolation);
    CHECK_THROWS_AS(group_randomized_cost(16, 17), ParameterViolation);
    CHECK_THROWS_AS(group_randomized_optimum(0), ParameterViolation);
}

TEST_CASE("walk-based group test exponent") {
    const auto q = group_quantum_exponent();
    CHECK(q.beta == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
    CHECK(q.exponent == doctest::Approx(11.0 / 14.0).epsilon(1e-12));
    CHECK(q.log_factor);
}

TEST_CASE("summary table of related bounds") {
    const auto rows = misc_bounds();
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].problem == "right-identity");
    CHECK(rows[0].lower == doctest::Approx(1.0));
    CHECK(rows[0].upper == doctest::Approx(1.0));
    CHECK(rows[1].problem == "quasigroup");
    CHECK(rows[1].upper == doctest::Approx(7.0 / 6.0));
    CHECK(rows[2].problem == "loop");
    CHECK(rows[2].upper == doctest::Approx(7.0 / 6.0));
    CHECK(rows[3].problem == "semigroup");
    CHECK(rows[3].upper == doctest::Approx(1.5));
    CHECK(rows[4].problem == "group");
    CHECK_FALSE(rows[4].lower_known);
    CHECK(rows[4].upper == doctest::Approx(11.0 / 14.0));
    CHECK(rows[4].upper_log_factor);
    for (const auto& row : rows)
        if (row.lower_known && row.upper_known) CHECK(row.lower <= row.upper + 1e-12);
}

TEST_CASE("regime names") {
    CHECK(std::string(regime_name(CostRegime::SmallCodomain)) == "small-codomain");
    CHECK(std::string(regime_name(CostRegime::MidCodomain)) == "mid-codomain");
    CHECK(std::string(regime_name(CostRegime::GroverFallback)) == "grover-fallback");
}
