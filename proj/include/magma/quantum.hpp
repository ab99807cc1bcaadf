#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace magma {

// Dense amplitude vector over the computational basis.
class StateVector {
  public:
    explicit StateVector(std::vector<std::complex<double>> amplitudes);

    static StateVector uniform(int dimension);

    int dimension() const { return static_cast<int>(amps_.size()); }
    const std::complex<double>& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }
    std::complex<double>& operator[](int i) { return amps_[static_cast<std::size_t>(i)]; }

    double norm() const;
    // Throws ParameterViolation when the norm strays from 1 by more than 1e-9.
    void check_normalized() const;

    // Total probability mass on the given basis states.
    double mass_on(const std::vector<int>& states) const;

  private:
    std::vector<std::complex<double>> amps_;
};

struct GroverResult {
    double success_probability = 0.0;
    std::uint64_t oracle_calls = 0;
    StateVector state;
};

// Exact simulation of Grover iterations (phase flip on marked states, then
// inversion about the mean) starting from the uniform state. One oracle call
// is charged per iteration.
GroverResult grover_run(int dimension, const std::vector<int>& marked, int iterations);

// Success probability after each of 0..iterations steps with k marked items,
// computed by one incremental simulation.
std::vector<double> grover_success_trajectory(int dimension, int k, int iterations);

// sin^2((2t+1) asin(sqrt(k/N))).
double grover_success_closed_form(int dimension, int k, int iterations);

// Success probability of amplitude amplification after the given number of
// reflection rounds when a single run succeeds with probability eps0:
// sin^2((2*rounds+1) asin(sqrt(eps0))).
double amplitude_amplify(double eps0, int rounds);

struct BBHTResult {
    std::optional<int> found;
    std::uint64_t oracle_calls = 0;
    int rounds = 0;
};

// Search with an unknown number of marked items, simulated faithfully at the
// level of round outcomes. Each round draws an iteration count t below the
// current cutoff, charges t+1 oracle calls, and succeeds with the exact
// Grover probability; the cutoff grows by a factor 6/5 up to sqrt(N), where
// six further rounds run before giving up. Finds a marked item with
// probability at least 1/2 whenever one exists; never errs when none does.
// The predicate is evaluated over the whole domain for bookkeeping; only the
// charged calls count as queries.
BBHTResult bbht_search(int dimension, const std::function<bool(int)>& predicate, std::uint64_t seed);

}  // namespace magma
