#pragma once

#include <string>
#include <vector>

namespace magma {

// Per-subroutine query charges for a walk-based search.
struct WalkCosts {
    double setup = 0.0;
    double update = 0.0;
    double check = 0.0;
};

// setup + (1/sqrt(eps)) * (update/sqrt(delta) + check).
double mnrs_cost(const WalkCosts& costs, double delta, double eps);

enum class CostRegime { SmallCodomain, MidCodomain, GroverFallback };

const char* regime_name(CostRegime regime);

struct ExponentResult {
    double beta = 0.0;      // subset size exponent r = n^beta (0 when not applicable)
    double exponent = 0.0;  // total queries scale as n^exponent
    CostRegime regime = CostRegime::GroverFallback;
    bool log_factor = false;
};

// Query exponent for deciding associativity with codomain size k = n^alpha,
// walking over r = n^beta subsets: the charges are setup (r+k)^2, update
// r+k, check k*sqrt(n*r), and the marked fraction is eps = ((r-k)/(n-k))^2
// with gap delta = (n-k)/(r(n-k-r)), at least 1/r. Minimizing over
// admissible beta (alpha < beta < 1) gives a piecewise answer:
//     alpha <= 1/6:          beta = 1/2 + alpha,       exponent 5/4 + alpha/2
//     1/6 < alpha <= 3/8:    beta = 3/5 + 2 alpha/5,   exponent 6/5 + 4 alpha/5
//     alpha > 3/8:           plain search over triples, exponent 3/2
// The closed form is cross-checked internally by a ternary search over beta;
// a disagreement above 1e-6 throws.
ExponentResult semigroup_exponent(double alpha);

// Query count (not an exponent) for concrete n, k, r from the same charges.
double semigroup_cost(int n, int k, int r);

// Classical two-phase group test: t(n, r) = n r + n^2 / r.
double group_randomized_cost(int n, int r);

// Minimizer of the classical cost: r = sqrt(n), t = 2 n^{3/2}.
struct GroupCostOptimum {
    double r = 0.0;
    double cost = 0.0;
};
GroupCostOptimum group_randomized_optimum(int n);

// Walk-based group test exponent: beta = 3/7, queries n^{11/14} up to a log
// factor.
struct GroupQuantumExponent {
    double beta = 0.0;
    double exponent = 0.0;
    bool log_factor = false;
};
GroupQuantumExponent group_quantum_exponent();

// Summary rows for the bounds on related table properties.
struct BoundRow {
    std::string problem;
    double lower = 0.0;          // query exponent
    double upper = 0.0;
    bool upper_log_factor = false;
    bool lower_known = true;
    bool upper_known = true;
};
std::vector<BoundRow> misc_bounds();

}  // namespace magma
