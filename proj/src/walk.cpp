#include "magma/walk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "magma/errors.hpp"

namespace magma {

namespace {

constexpr double kEntryTol = 1e-12;

void check_square_stochastic_symmetric(const Eigen::MatrixXd& p) {
    if (p.rows() < 1 || p.rows() != p.cols()) throw ParameterViolation("transition matrix must be square");
    const int n = static_cast<int>(p.rows());
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (p(i, j) < -kEntryTol) throw ParameterViolation("transition matrix has a negative entry");
            if (std::abs(p(i, j) - p(j, i)) > kEntryTol)
                throw ParameterViolation("transition matrix must be symmetric");
            row += p(i, j);
        }
        if (std::abs(row - 1.0) > kEntryTol) {
            std::ostringstream msg;
            msg << "row " << i << " sums to " << row << ", not 1";
            throw ParameterViolation(msg.str());
        }
    }
}

void check_connected(const Eigen::MatrixXd& p) {
    const int n = static_cast<int>(p.rows());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v)
            if (p(u, v) > 0.0 && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw ParameterViolation("chain is not irreducible");
}

std::uint64_t binomial_capped(int m, int r, std::size_t cap) {
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i) {
        c = c * static_cast<std::uint64_t>(m - i) / static_cast<std::uint64_t>(i + 1);
        if (c > cap) {
            std::ostringstream msg;
            msg << "binomial(" << m << "," << r << ") exceeds cap " << cap;
            throw CombinatorialBlowup(msg.str());
        }
    }
    return c;
}

}  // namespace

MarkovChain::MarkovChain(Eigen::MatrixXd transition) : p_(std::move(transition)) {
    check_square_stochastic_symmetric(p_);
    check_connected(p_);
}

bool MarkovChain::is_aperiodic() const {
    // A connected symmetric chain is periodic exactly when its support graph
    // is bipartite; a self loop counts as an odd cycle.
    const int n = dimension();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{0};
    color[0] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            if (p_(u, v) <= 0.0) continue;
            if (color[static_cast<std::size_t>(v)] == -1) {
                color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                queue.push_back(v);
            } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                return true;
            }
        }
    }
    return false;
}

void MarkovChain::require_ergodic() const {
    if (!is_aperiodic())
        throw ParameterViolation("chain support graph is bipartite; the quantized walk needs an aperiodic chain");
}

std::vector<std::vector<int>> johnson_subsets(int m, int r, std::size_t cap) {
    if (m < 2 || r < 1 || r >= m) {
        std::ostringstream msg;
        msg << "Johnson graph J(" << m << "," << r << ") needs 1 <= r < m";
        throw ParameterViolation(msg.str());
    }
    binomial_capped(m, r, cap);
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        subsets.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - r + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return subsets;
}

MarkovChain johnson_chain(int m, int r, std::size_t cap) {
    const auto subsets = johnson_subsets(m, r, cap);
    const auto dim = subsets.size();
    if (dim * dim > cap) {
        std::ostringstream msg;
        msg << "J(" << m << "," << r << ") transition matrix has " << dim * dim << " entries, cap " << cap;
        throw CombinatorialBlowup(msg.str());
    }
    std::vector<std::uint64_t> masks(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        for (int x : subsets[i]) masks[i] |= std::uint64_t{1} << x;
    const double deg = static_cast<double>(r) * (m - r);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (std::popcount(masks[i] & masks[j]) == r - 1) {
                p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0 / deg;
                p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0 / deg;
            }
    return MarkovChain(std::move(p));
}

double johnson_gap_closed_form(int m, int r) {
    if (m < 2 || r < 1 || r >= m) throw ParameterViolation("Johnson parameters need 1 <= r < m");
    return static_cast<double>(m) / (static_cast<double>(r) * (m - r));
}

MarkovChain product_chain(const MarkovChain& a, const MarkovChain& b, std::size_t cap) {
    const auto da = static_cast<std::size_t>(a.dimension());
    const auto db = static_cast<std::size_t>(b.dimension());
    const auto dim = da * db;
    if (dim * dim > cap) {
        std::ostringstream msg;
        msg << "product chain has " << dim * dim << " matrix entries, cap " << cap;
        throw CombinatorialBlowup(msg.str());
    }
    Eigen::MatrixXd p(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < db; ++j1)
            for (std::size_t i2 = 0; i2 < da; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    p(static_cast<Eigen::Index>(i1 * db + j1), static_cast<Eigen::Index>(i2 * db + j2)) =
                        a.transition()(static_cast<Eigen::Index>(i1), static_cast<Eigen::Index>(i2)) *
                        b.transition()(static_cast<Eigen::Index>(j1), static_cast<Eigen::Index>(j2));
    return MarkovChain(std::move(p));
}

Eigen::VectorXd spectrum(const MarkovChain& chain) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(chain.transition(), Eigen::EigenvaluesOnly);
    if (solver.info() == Eigen::Success) return solver.eigenvalues();
    // The tridiagonal QL iteration can stall on heavily degenerate spectra
    // (seen on the J(6,2) x J(4,2) product); the Schur path handles those.
    Eigen::EigenSolver<Eigen::MatrixXd> schur(chain.transition(), false);
    if (schur.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
    Eigen::VectorXd evals = schur.eigenvalues().real();
    std::sort(evals.begin(), evals.end());
    return evals;
}

double spectral_gap(const MarkovChain& chain) {
    const int n = chain.dimension();
    if (n == 1) return 1.0;
    const Eigen::VectorXd evals = spectrum(chain);
    return 1.0 - evals(n - 2);
}

int szegedy_step_budget(double delta, double eps, double calibration) {
    if (!(delta > 0.0) || !(eps > 0.0) || !(calibration > 0.0))
        throw ParameterViolation("step budget needs positive gap, marked fraction and calibration");
    return static_cast<int>(std::ceil(calibration / std::sqrt(delta * eps)));
}

SzegedyResult szegedy_detect(const MarkovChain& chain, const std::vector<int>& marked, int max_steps,
                             std::size_t cap) {
    chain.require_ergodic();
    const int n = chain.dimension();
    if (max_steps < 0) throw ParameterViolation("max_steps must be nonnegative");
    if (static_cast<std::size_t>(n) * n > cap) throw CombinatorialBlowup("walk state space exceeds cap");
    std::vector<char> is_marked(static_cast<std::size_t>(n), 0);
    for (int x : marked) {
        if (x < 0 || x >= n) throw ParameterViolation("marked state out of range");
        is_marked[static_cast<std::size_t>(x)] = 1;
    }

    const Eigen::MatrixXd s = chain.transition().cwiseSqrt();
    Eigen::MatrixXd psi = s / std::sqrt(static_cast<double>(n));
    const Eigen::MatrixXd psi0 = psi;

    SzegedyResult result;
    result.statistic.reserve(static_cast<std::size_t>(max_steps));
    for (int t = 1; t <= max_steps; ++t) {
        for (int x = 0; x < n; ++x)
            if (is_marked[static_cast<std::size_t>(x)]) psi.row(x) = -psi.row(x);
        const Eigen::ArrayXd row_dots = (s.cwiseProduct(psi)).rowwise().sum().array();
        psi = 2.0 * (s.array().colwise() * row_dots).matrix() - psi;
        const Eigen::Array<double, 1, Eigen::Dynamic> col_dots = (s.cwiseProduct(psi)).colwise().sum().array();
        psi = 2.0 * (s.array().rowwise() * col_dots).matrix() - psi;

        const double overlap = psi.cwiseProduct(psi0).sum();
        const double stat = 0.5 * (1.0 - overlap);
        result.statistic.push_back(stat);
        if (stat > result.detection) result.detection = stat;
        if (!result.first_crossing && stat >= 0.5) result.first_crossing = t;
        ++result.walk_steps;
    }
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-9) throw std::runtime_error("walk state norm drifted");
    return result;
}

}  // namespace magma
