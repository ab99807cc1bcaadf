#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magma/core.hpp"

namespace magma {

// Black-box view of a multiplication table. Every cell read costs exactly one
// query; the oracle never deduplicates (caching is the caller's business).
// The problem parameters n, M, and the declared identity are free knowledge;
// the cells are not. Single-owner mutable; concurrent trials use independent
// oracles over a shared immutable table.
class CountingOracle {
  public:
    explicit CountingOracle(const MagmaTable& table,
                            std::optional<std::uint64_t> budget = std::nullopt,
                            bool log_queries = false)
        : table_(&table), budget_(budget), logging_(log_queries) {}

    // The oracle refers to the table; a temporary would dangle.
    explicit CountingOracle(MagmaTable&&, std::optional<std::uint64_t> = std::nullopt, bool = false) = delete;

    // Throws BudgetExhausted before the read when the budget is already spent;
    // the count is left unchanged in that case.
    Element query(Element i, Element j);

    std::uint64_t count() const { return count_; }

    void reset() {
        count_ = 0;
        log_.clear();
    }

    std::optional<std::uint64_t> budget() const { return budget_; }
    void set_budget(std::optional<std::uint64_t> budget) { budget_ = budget; }

    bool logging() const { return logging_; }
    const std::vector<std::pair<Element, Element>>& log() const { return log_; }

    // Free problem parameters.
    int size() const { return table_->size(); }
    const std::vector<Element>& codomain() const { return table_->codomain(); }
    int codomain_size() const { return table_->codomain_size(); }
    bool in_codomain(Element x) const { return table_->in_codomain(x); }
    std::optional<Element> declared_identity() const { return table_->declared_identity(); }

  private:
    const MagmaTable* table_;
    std::uint64_t count_ = 0;
    std::optional<std::uint64_t> budget_;
    bool logging_ = false;
    std::vector<std::pair<Element, Element>> log_;
};

// One benchmark/verdict row. queries is the oracle count at verdict time.
struct RunRecord {
    std::string algorithm;
    int n = 0;
    int k = 0;
    int r = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string verdict;
    std::uint64_t queries = 0;
    double wall_ms = 0.0;

    static std::string csv_header() { return "algorithm,n,k,r,trials,seed,verdict,queries,wall_ms"; }
    std::string csv_row() const;
};

// Memoizing read layer over a counting oracle. Distinct cells cost one query
// each; repeats are free to the caller and invisible to the oracle.
class CachedOracle {
  public:
    explicit CachedOracle(CountingOracle& oracle)
        : oracle_(&oracle), cache_(static_cast<std::size_t>(oracle.size()) * oracle.size(), kUnknown) {}

    Element read(Element i, Element j) {
        Element& slot = cache_[static_cast<std::size_t>(i) * oracle_->size() + j];
        if (slot == kUnknown) slot = oracle_->query(i, j);
        return slot;
    }

    CountingOracle& oracle() { return *oracle_; }

  private:
    static constexpr Element kUnknown = -1;
    CountingOracle* oracle_;
    std::vector<Element> cache_;
};

// Brute-force associativity decision driven through the counted interface,
// with full caller-side caching (at most n^2 reads).
PropertyReport is_associative_counted(CountingOracle& oracle);

}  // namespace magma
