#include <Eigen/Dense>
#include <vector>

#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/walk.hpp"

using namespace magma;

TEST_CASE("transition matrix validation") {
    Eigen::MatrixXd rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(MarkovChain{rect}, ParameterViolation);

    Eigen::MatrixXd neg(2, 2);
    neg << 1.5, -0.5, -0.5, 1.5;
    CHECK_THROWS_AS(MarkovChain{neg}, ParameterViolation);

    Eigen::MatrixXd short_rows(2, 2);
    short_rows << 0.5, 0.25, 0.25, 0.5;
    CHECK_THROWS_AS(MarkovChain{short_rows}, ParameterViolation);

    Eigen::MatrixXd asym(2, 2);
    asym << 0.25, 0.75, 0.5, 0.5;
    CHECK_THROWS_AS(MarkovChain{asym}, ParameterViolation);

    Eigen::MatrixXd split(4, 4);
    split << 0.5, 0.5, 0, 0, 0.5, 0.5, 0, 0, 0, 0, 0.5, 0.5, 0, 0, 0.5, 0.5;
    CHECK_THROWS_AS(MarkovChain{split}, ParameterViolation);

    Eigen::MatrixXd ok(2, 2);
    ok << 0.5, 0.5, 0.5, 0.5;
    CHECK_NOTHROW(MarkovChain{ok});
}

TEST_CASE("aperiodicity detection") {
    Eigen::MatrixXd lazy(2, 2);
    lazy << 0.5, 0.5, 0.5, 0.5;
    CHECK(MarkovChain(lazy).is_aperiodic());
    CHECK_NOTHROW(MarkovChain(lazy).require_ergodic());

    const auto edge = johnson_chain(2, 1);
    CHECK_FALSE(edge.is_aperiodic());
    CHECK_THROWS_AS(edge.require_ergodic(), ParameterViolation);
}

TEST_CASE("subset enumeration is lexicographic") {
    const auto subsets = johnson_subsets(4, 2);
    const std::vector<std::vector<int>> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(subsets == expected);
    CHECK(johnson_subsets(6, 3).size() == 20);
    CHECK_THROWS_AS(johnson_subsets(4, 0), ParameterViolation);
    CHECK_THROWS_AS(johnson_subsets(4, 4), ParameterViolation);
    CHECK_THROWS_AS(johnson_subsets(40, 20, 1000), CombinatorialBlowup);
}

TEST_CASE("spectral gaps match the closed form") {
    CHECK(spectral_gap(johnson_chain(4, 2)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(spectral_gap(johnson_chain(6, 2)) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(johnson_gap_closed_form(4, 2) == doctest::Approx(1.0));
    CHECK(johnson_gap_closed_form(6, 2) == doctest::Approx(0.75));

    for (int m = 2; m <= 9; ++m)
        for (int r = 1; r < m; ++r) {
            const double gap = spectral_gap(johnson_chain(m, r));
            CHECK(gap == doctest::Approx(johnson_gap_closed_form(m, r)).epsilon(1e-9));
            CHECK(gap >= 1.0 / r - 1e-12);
        }
}

TEST_CASE("the two-vertex graph is bipartite yet keeps the closed-form gap") {
    const auto edge = johnson_chain(2, 1);
    CHECK(edge.dimension() == 2);
    CHECK(spectral_gap(edge) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(johnson_gap_closed_form(2, 1) == doctest::Approx(2.0));
}

TEST_CASE("product chain eigenvalues are pairwise products") {
    const auto a = johnson_chain(4, 2);
    const auto prod = product_chain(a, a);
    CHECK(prod.dimension() == 36);
    // factor spectrum {-1/2, 0, 1}; the largest product below 1 is 1/4
    CHECK(spectral_gap(prod) == doctest::Approx(0.75).epsilon(1e-9));

    const auto b = johnson_chain(5, 2);
    const auto ab = product_chain(a, b);
    const Eigen::VectorXd ea = spectrum(a);
    const Eigen::VectorXd eb = spectrum(b);
    double second = -2.0;
    for (int i = 0; i < ea.size(); ++i)
        for (int j = 0; j < eb.size(); ++j) {
            const bool top = i == ea.size() - 1 && j == eb.size() - 1;
            if (!top) second = std::max(second, ea(i) * eb(j));
        }
    CHECK(spectral_gap(ab) == doctest::Approx(1.0 - second).epsilon(1e-9));

    CHECK_THROWS_AS(product_chain(a, b, 100), CombinatorialBlowup);
}

TEST_CASE("spectrum survives the product order that stalls the QL iteration") {
    // Eigen 3.4's SelfAdjointEigenSolver returns NoConvergence on
    // J(6,2) x J(4,2) (dim 90) while the reversed order works.
    const auto a = johnson_chain(6, 2);
    const auto b = johnson_chain(4, 2);
    const auto ab = product_chain(a, b);
    const auto ba = product_chain(b, a);
    CHECK(ab.dimension() == 90);
    CHECK(spectral_gap(ab) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(spectral_gap(ba) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("step budget") {
    CHECK(szegedy_step_budget(0.75, 1.0 / 15.0) == 9);
    CHECK(szegedy_step_budget(1.0, 1.0) == 2);
    CHECK_THROWS_AS(szegedy_step_budget(0.0, 0.5), ParameterViolation);
    CHECK_THROWS_AS(szegedy_step_budget(0.5, 0.0), ParameterViolation);
    CHECK_THROWS_AS(szegedy_step_budget(0.5, 0.5, 0.0), ParameterViolation);
}

TEST_CASE("quantized walk detects a single marked vertex within budget") {
    const auto chain = johnson_chain(6, 2);
    const int budget = szegedy_step_budget(0.75, 1.0 / 15.0);
    const auto result = szegedy_detect(chain, {0}, budget);
    CHECK(result.walk_steps == static_cast<std::uint64_t>(budget));
    CHECK(result.statistic.size() == static_cast<std::size_t>(budget));
    CHECK(result.detection >= 0.5);
    REQUIRE(result.first_crossing.has_value());
    CHECK(*result.first_crossing == 4);
}

TEST_CASE("quantized walk is silent with nothing marked") {
    const auto chain = johnson_chain(6, 2);
    const auto result = szegedy_detect(chain, {}, 16);
    CHECK(result.detection < 1e-12);
    CHECK_FALSE(result.first_crossing.has_value());
    for (double s : result.statistic) CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("quantized walk saturates when everything is marked") {
    const auto chain = johnson_chain(6, 2);
    std::vector<int> all;
    for (int i = 0; i < chain.dimension(); ++i) all.push_back(i);
    const auto result = szegedy_detect(chain, all, 3);
    CHECK(result.statistic[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.detection == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(result.first_crossing.has_value());
    CHECK(*result.first_crossing == 1);
}

TEST_CASE("quantized walk argument validation") {
    const auto chain = johnson_chain(6, 2);
    CHECK_THROWS_AS(szegedy_detect(chain, {15}, 4), ParameterViolation);
    CHECK_THROWS_AS(szegedy_detect(chain, {-1}, 4), ParameterViolation);
    CHECK_THROWS_AS(szegedy_detect(chain, {0}, -1), ParameterViolation);
    CHECK_THROWS_AS(szegedy_detect(chain, {0}, 4, 10), CombinatorialBlowup);
    CHECK_THROWS_AS(szegedy_detect(johnson_chain(2, 1), {0}, 4), ParameterViolation);
}
