#include "magma/group_test.hpp"

#include <cmath>
#include <sstream>

#include "magma/errors.hpp"
#include "magma/rng.hpp"

namespace magma {

const char* verdict_name(GroupVerdict v) {
    switch (v) {
        case GroupVerdict::ProbablyGroup: return "probably-group";
        case GroupVerdict::NotGroup: return "not-group";
        case GroupVerdict::Group: return "group";
    }
    return "?";
}

GroupTestParams default_group_test_params(int n) {
    if (n < 1) throw ParameterViolation("n must be positive");
    GroupTestParams p;
    p.r = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n)))));
    p.trials = (n + p.r - 1) / p.r;
    return p;
}

namespace {

void validate(int n, Element e, const GroupTestParams& params) {
    if (e < 0 || e >= n) {
        std::ostringstream msg;
        msg << "identity " << e << " out of range for n=" << n;
        throw ParameterViolation(msg.str());
    }
    if (params.r < 1 || params.r > n) {
        std::ostringstream msg;
        msg << "power window r=" << params.r << " must satisfy 1 <= r <= n=" << n;
        throw ParameterViolation(msg.str());
    }
    if (params.trials < 1) throw ParameterViolation("trials must be >= 1");
}

Element checked_query(CountingOracle& oracle, Element e, Element i, Element j) {
    const Element v = oracle.query(i, j);
    if ((i == e && v != j) || (j == e && v != i)) {
        std::ostringstream msg;
        msg << "declared identity " << e << " violated at (" << i << "," << j << ") -> " << v;
        throw PromiseViolation(msg.str());
    }
    return v;
}

}  // namespace

GroupTestResult group_test_randomized(CountingOracle& oracle, Element e, const GroupTestParams& params) {
    const int n = oracle.size();
    validate(n, e, params);
    SplitMix64 rng(params.seed);

    // Phase 1: power sequences. a itself is free knowledge; each further power
    // costs one query. A repeated power with no identity in the window means
    // the cyclic part of <a> misses e, so a has no inverse.
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    bool all_invertible = true;
    for (Element a = 0; a < n; ++a) {
        Element cur = a;
        stamp[static_cast<std::size_t>(cur)] = a;
        bool invertible = (cur == e);
        for (int i = 2; i <= params.r && !invertible; ++i) {
            cur = checked_query(oracle, e, cur, a);
            if (cur == e) {
                invertible = true;
                break;
            }
            if (stamp[static_cast<std::size_t>(cur)] == a)
                return {GroupVerdict::NotGroup, {a}, oracle.count(), 1};
            stamp[static_cast<std::size_t>(cur)] = a;
        }
        all_invertible = all_invertible && invertible;
    }
    if (all_invertible) return {GroupVerdict::Group, {}, oracle.count(), 0};

    // Phase 2: random rows scanned for e. A monoid in which every row holds e
    // is a group, so a row without e is a certificate of rejection.
    for (int t = 0; t < params.trials; ++t) {
        const Element a = static_cast<Element>(rng.below(static_cast<std::uint64_t>(n)));
        bool found = false;
        for (Element x = 0; x < n && !found; ++x)
            found = (checked_query(oracle, e, a, x) == e);
        if (!found) return {GroupVerdict::NotGroup, {a}, oracle.count(), 2};
    }
    return {GroupVerdict::ProbablyGroup, {}, oracle.count(), 0};
}

GroupTestResult naive_group_test(CountingOracle& oracle, Element e) {
    const int n = oracle.size();
    if (e < 0 || e >= n) throw ParameterViolation("identity out of range");
    CachedOracle cached(oracle);
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element x = 0; x < n && !found; ++x) {
            const Element v = cached.read(a, x);
            if ((a == e && v != x) || (x == e && v != a))
                throw PromiseViolation("declared identity violated");
            found = (v == e);
        }
        if (!found) return {GroupVerdict::NotGroup, {a}, oracle.count(), 2};
    }
    return {GroupVerdict::Group, {}, oracle.count(), 0};
}

}  // namespace magma
