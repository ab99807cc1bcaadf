#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "magma/core.hpp"
#include "magma/cost_model.hpp"
#include "magma/oracle.hpp"

namespace magma {

struct MarkedFractionResult {
    std::uint64_t marked = 0;
    std::uint64_t total = 0;
    double epsilon = 0.0;
};

// Guaranteed marked fraction per side when r-subsets are drawn from the n-k
// elements outside the codomain: ((r-k)/(n-k))^2, clamped at 0 for r <= k.
double epsilon_lower_bound(int n, int k, int r);

// Exhaustive count over ordered pairs (A,B) of r-subsets of the non-codomain
// elements. A pair is marked when some a in A+M, b in B+M and c in S violate
// (a.b).c = a.(b.c), where M is the codomain. Pair count is capped.
MarkedFractionResult semigroup_marked_fraction(const MagmaTable& table, int r, std::size_t cap = 1'000'000);

// Table rows/columns held by a walk position: all products (a.b) for
// a in A+M, b in B+M, fetched through the oracle and cached. Exchange moves
// re-fetch exactly one row or column.
class WalkDatabase {
  public:
    WalkDatabase(CountingOracle& oracle, std::vector<Element> a_side, std::vector<Element> b_side);

    const std::vector<Element>& a_side() const { return a_; }
    const std::vector<Element>& b_side() const { return b_; }
    const std::vector<Element>& rows() const { return rows_; }
    const std::vector<Element>& cols() const { return cols_; }

    // Cached oracle read, available for any cell.
    Element read(Element i, Element j);
    bool known(Element i, Element j) const;

    void exchange_a(Element out, Element in);
    void exchange_b(Element out, Element in);

    // First violating triple (a, b, c) with a in rows, b in cols, c anywhere,
    // if one exists. Reads go through the cache.
    std::optional<std::array<Element, 3>> find_violation();

    // Every cached cell must agree with the table.
    bool verify_against(const MagmaTable& table) const;

    std::uint64_t queries() const;

  private:
    void fetch_row(Element a);
    void fetch_col(Element b);
    void rebuild_axes();

    CountingOracle* oracle_;
    std::vector<Element> a_, b_;      // walk positions, outside the codomain
    std::vector<Element> rows_, cols_;  // position plus codomain, sorted
    std::vector<Element> cache_;
    int n_;
};

struct WalkEmulationResult {
    bool violation_found = false;
    std::array<Element, 3> witness{-1, -1, -1};
    int steps_taken = 0;
    int step_budget = 0;
    std::uint64_t queries = 0;
    double charged_cost = 0.0;  // setup + per-step update + per-check charges
    double quantum_cost = 0.0;  // walk-search cost at the same parameters
    double delta = 0.0;
    double eps_bound = 0.0;
};

// Classical random walk over pairs of r-subsets of the non-codomain elements
// that mirrors the walk search's query accounting. Requires r > 2k and
// r < n-k. The step budget is ceil(1/(delta * eps_bound)); each step
// exchanges one element on one side and checks the database for a violating
// triple. Finding one ends the walk early.
WalkEmulationResult semigroup_walk_emulation(CountingOracle& oracle, int r, std::uint64_t seed);

}  // namespace magma
