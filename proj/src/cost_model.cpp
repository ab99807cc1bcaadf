#include "magma/cost_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "magma/errors.hpp"

namespace magma {

double mnrs_cost(const WalkCosts& costs, double delta, double eps) {
    if (!(delta > 0.0)) throw ParameterViolation("spectral gap must be positive");
    if (!(eps > 0.0 && eps <= 1.0)) throw ParameterViolation("marked fraction must lie in (0,1]");
    if (costs.setup < 0.0 || costs.update < 0.0 || costs.check < 0.0)
        throw ParameterViolation("walk costs must be nonnegative");
    return costs.setup + (1.0 / std::sqrt(eps)) * (costs.update / std::sqrt(delta) + costs.check);
}

const char* regime_name(CostRegime regime) {
    switch (regime) {
        case CostRegime::SmallCodomain: return "small-codomain";
        case CostRegime::MidCodomain: return "mid-codomain";
        case CostRegime::GroverFallback: return "grover-fallback";
    }
    return "?";
}

namespace {

// Query exponent of the walk at subset exponent beta, codomain exponent
// alpha: max of setup 2*beta, walk term 1 + beta/2, and checking term
// 3/2 + alpha - beta/2.
double walk_exponent(double alpha, double beta) {
    const double setup = 2.0 * beta;
    const double update_term = 1.0 + beta / 2.0;
    const double check_term = 1.5 + alpha - beta / 2.0;
    return std::max(setup, std::max(update_term, check_term));
}

double ternary_min(double lo, double hi, const auto& f) {
    for (int it = 0; it < 300; ++it) {
        const double a = lo + (hi - lo) / 3.0;
        const double b = hi - (hi - lo) / 3.0;
        if (f(a) <= f(b))
            hi = b;
        else
            lo = a;
    }
    return f(0.5 * (lo + hi));
}

}  // namespace

ExponentResult semigroup_exponent(double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw ParameterViolation("codomain exponent must lie in [0,1]");
    ExponentResult result;
    if (alpha <= 1.0 / 6.0) {
        result.regime = CostRegime::SmallCodomain;
        result.beta = 0.5 + alpha;
        result.exponent = 1.25 + alpha / 2.0;
    } else if (alpha <= 3.0 / 8.0) {
        result.regime = CostRegime::MidCodomain;
        result.beta = 0.6 + 0.4 * alpha;
        result.exponent = 1.2 + 0.8 * alpha;
    } else {
        result.regime = CostRegime::GroverFallback;
        result.beta = 0.0;
        result.exponent = 1.5;
    }

    if (alpha < 1.0 - 1e-9) {
        const double best =
            ternary_min(alpha + 1e-9, 1.0, [alpha](double beta) { return walk_exponent(alpha, beta); });
        const double optimum = std::min(best, 1.5);
        if (std::abs(optimum - result.exponent) > 1e-6) {
            std::ostringstream msg;
            msg << "closed-form exponent " << result.exponent << " disagrees with numeric optimum " << optimum
                << " at alpha=" << alpha;
            throw std::logic_error(msg.str());
        }
    }
    return result;
}

double semigroup_cost(int n, int k, int r) {
    if (n < 1 || k < 1 || k >= n) throw ParameterViolation("need 1 <= k < n");
    if (r <= k || r >= n - k) throw ParameterViolation("subset size must satisfy k < r < n-k");
    const int m = n - k;
    const double delta = static_cast<double>(m) / (static_cast<double>(r) * (m - r));
    const double frac = static_cast<double>(r - k) / m;
    const double eps = frac * frac;
    WalkCosts costs;
    costs.setup = static_cast<double>(r + k) * (r + k);
    costs.update = static_cast<double>(r + k);
    costs.check = static_cast<double>(k) * std::sqrt(static_cast<double>(n) * r);
    return mnrs_cost(costs, delta, eps);
}

double group_randomized_cost(int n, int r) {
    if (n < 1 || r < 1 || r > n) throw ParameterViolation("need 1 <= r <= n");
    return static_cast<double>(n) * r + static_cast<double>(n) * n / r;
}

GroupCostOptimum group_randomized_optimum(int n) {
    if (n < 1) throw ParameterViolation("n must be positive");
    GroupCostOptimum opt;
    opt.r = std::sqrt(static_cast<double>(n));
    opt.cost = 2.0 * std::pow(static_cast<double>(n), 1.5);
    return opt;
}

GroupQuantumExponent group_quantum_exponent() {
    // Power sequences of length n^beta cost n^{1 - beta/2} to search when
    // amortized over the walk, while the row-scan side costs
    // n^{1/2 + 2 beta/3}; the two balance at beta = 3/7.
    const auto f = [](double beta) { return std::max(0.5 + 2.0 * beta / 3.0, 1.0 - beta / 2.0); };
    const double best = ternary_min(0.0, 1.0, f);
    GroupQuantumExponent result{3.0 / 7.0, 11.0 / 14.0, true};
    if (std::abs(best - result.exponent) > 1e-6) throw std::logic_error("group exponent cross-check failed");
    return result;
}

std::vector<BoundRow> misc_bounds() {
    return {
        {"right-identity", 1.0, 1.0, false, true, true},
        {"quasigroup", 1.0, 7.0 / 6.0, false, true, true},
        {"loop", 1.0, 7.0 / 6.0, false, true, true},
        {"semigroup", 1.0, 1.5, false, true, true},
        {"group", 0.0, 11.0 / 14.0, true, false, true},
    };
}

}  // namespace magma
