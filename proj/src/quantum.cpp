#include "magma/quantum.hpp"

#include <cmath>
#include <sstream>

#include "magma/errors.hpp"
#include "magma/rng.hpp"

namespace magma {

StateVector::StateVector(std::vector<std::complex<double>> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw ParameterViolation("state vector must have positive dimension");
}

StateVector StateVector::uniform(int dimension) {
    if (dimension < 1) throw ParameterViolation("dimension must be positive");
    const double a = 1.0 / std::sqrt(static_cast<double>(dimension));
    return StateVector(std::vector<std::complex<double>>(static_cast<std::size_t>(dimension), {a, 0.0}));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::check_normalized() const {
    const double n = norm();
    if (std::abs(n - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "state norm " << n << " drifted from 1";
        throw ParameterViolation(msg.str());
    }
}

double StateVector::mass_on(const std::vector<int>& states) const {
    double s = 0.0;
    for (int i : states) {
        if (i < 0 || i >= dimension()) throw ParameterViolation("basis index out of range");
        s += std::norm(amps_[static_cast<std::size_t>(i)]);
    }
    return s;
}

namespace {

void check_marked(int dimension, const std::vector<int>& marked) {
    if (dimension < 1) throw ParameterViolation("dimension must be positive");
    for (int m : marked)
        if (m < 0 || m >= dimension) throw ParameterViolation("marked index out of range");
}

void grover_step(StateVector& psi, const std::vector<int>& marked) {
    const int n = psi.dimension();
    for (int m : marked) psi[m] = -psi[m];
    std::complex<double> mean{0.0, 0.0};
    for (int i = 0; i < n; ++i) mean += psi[i];
    mean /= static_cast<double>(n);
    for (int i = 0; i < n; ++i) psi[i] = 2.0 * mean - psi[i];
}

}  // namespace

GroverResult grover_run(int dimension, const std::vector<int>& marked, int iterations) {
    check_marked(dimension, marked);
    if (iterations < 0) throw ParameterViolation("iterations must be nonnegative");
    StateVector psi = StateVector::uniform(dimension);
    for (int t = 0; t < iterations; ++t) grover_step(psi, marked);
    psi.check_normalized();
    return {psi.mass_on(marked), static_cast<std::uint64_t>(iterations), std::move(psi)};
}

std::vector<double> grover_success_trajectory(int dimension, int k, int iterations) {
    if (k < 0 || k > dimension) throw ParameterViolation("marked count out of range");
    std::vector<int> marked(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) marked[static_cast<std::size_t>(i)] = i;
    StateVector psi = StateVector::uniform(dimension);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(iterations) + 1);
    out.push_back(psi.mass_on(marked));
    for (int t = 1; t <= iterations; ++t) {
        grover_step(psi, marked);
        out.push_back(psi.mass_on(marked));
    }
    psi.check_normalized();
    return out;
}

double grover_success_closed_form(int dimension, int k, int iterations) {
    if (dimension < 1) throw ParameterViolation("dimension must be positive");
    if (k < 0 || k > dimension) throw ParameterViolation("marked count out of range");
    if (iterations < 0) throw ParameterViolation("iterations must be nonnegative");
    const double theta = std::asin(std::sqrt(static_cast<double>(k) / dimension));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

double amplitude_amplify(double eps0, int rounds) {
    if (eps0 < 0.0 || eps0 > 1.0) throw ParameterViolation("base success probability must lie in [0,1]");
    if (rounds < 0) throw ParameterViolation("rounds must be nonnegative");
    const double s = std::sin((2.0 * rounds + 1.0) * std::asin(std::sqrt(eps0)));
    return s * s;
}

BBHTResult bbht_search(int dimension, const std::function<bool(int)>& predicate, std::uint64_t seed) {
    if (dimension < 1) throw ParameterViolation("dimension must be positive");
    std::vector<int> marked;
    for (int i = 0; i < dimension; ++i)
        if (predicate(i)) marked.push_back(i);
    const int k = static_cast<int>(marked.size());
    const double theta = k > 0 ? std::asin(std::sqrt(static_cast<double>(k) / dimension)) : 0.0;
    const double cap = std::sqrt(static_cast<double>(dimension));

    SplitMix64 rng(seed);
    BBHTResult result;
    double m = 1.0;
    int rounds_at_cap = 0;
    while (true) {
        ++result.rounds;
        const auto limit = static_cast<std::uint64_t>(std::ceil(m));
        const auto t = rng.below(limit);
        result.oracle_calls += t + 1;
        if (k > 0) {
            const double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
            if (rng.next_double() < s * s) {
                result.found = marked[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)))];
                return result;
            }
        }
        if (m >= cap) {
            if (++rounds_at_cap >= 6) return result;
        } else {
            m = std::min(m * 1.2, cap);
        }
    }
}

}  // namespace magma
