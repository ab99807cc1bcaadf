#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

namespace magma {

inline constexpr std::size_t kDefaultCap = 1'000'000;

// Symmetric stochastic transition matrix over a finite connected state space.
// Aperiodicity is checked separately: spectral quantities are well defined
// for bipartite chains, the quantized walk is not run on them.
class MarkovChain {
  public:
    explicit MarkovChain(Eigen::MatrixXd transition);

    int dimension() const { return static_cast<int>(p_.rows()); }
    const Eigen::MatrixXd& transition() const { return p_; }

    bool is_aperiodic() const;
    // Throws ParameterViolation when the support graph is bipartite.
    void require_ergodic() const;

  private:
    Eigen::MatrixXd p_;
};

// r-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> johnson_subsets(int m, int r, std::size_t cap = kDefaultCap);

// Random walk on the Johnson graph J(m,r): vertices are r-subsets, edges join
// subsets sharing r-1 points, every degree is r(m-r).
MarkovChain johnson_chain(int m, int r, std::size_t cap = kDefaultCap);

// Spectral gap of J(m,r): m / (r(m-r)).
double johnson_gap_closed_form(int m, int r);

// Tensor (Kronecker) product chain; its eigenvalues are all pairwise
// products of the factors' eigenvalues.
MarkovChain product_chain(const MarkovChain& a, const MarkovChain& b, std::size_t cap = kDefaultCap);

// Eigenvalues in ascending order.
Eigen::VectorXd spectrum(const MarkovChain& chain);

// 1 minus the second-largest eigenvalue (1 for a one-state chain).
double spectral_gap(const MarkovChain& chain);

struct SzegedyResult {
    double detection = 0.0;                // max over steps of (1 - <psi0|psi_t>) / 2
    std::optional<int> first_crossing;     // earliest step with statistic >= 1/2
    std::vector<double> statistic;         // statistic after each step, index 0 = step 1
    std::uint64_t walk_steps = 0;
};

// Budget constant for the quantized-walk detection tests: with
// steps = ceil(C / sqrt(delta * eps)) the statistic reliably crosses 1/2 on
// the chains exercised here. Calibrated once against J(6,2) with a single
// marked vertex (crossing at step 4 of the 9-step budget) and frozen.
inline constexpr double kSzegedyCalibrationC = 2.0;

int szegedy_step_budget(double delta, double eps, double calibration = kSzegedyCalibrationC);

// Quantized walk on the chain's edge space. Starts from the stationary
// superposition, and per step applies the marked-state phase flip followed by
// the two Szegedy reflections. With no marked states the start state is a
// fixed point and the statistic stays at 0; with marked mass eps the
// statistic passes 1/2 within O(1/sqrt(delta*eps)) steps.
SzegedyResult szegedy_detect(const MarkovChain& chain, const std::vector<int>& marked, int max_steps,
                             std::size_t cap = kDefaultCap);

}  // namespace magma
