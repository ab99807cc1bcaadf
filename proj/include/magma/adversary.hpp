#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magma/bit_matrix.hpp"
#include "magma/core.hpp"
#include "magma/rng.hpp"

namespace magma {

// Hard instance pair for associativity. The positive table places 1 at
// (1,1), (1,c), (c,1), (c,c) and 0 everywhere else, which is associative:
// products are 1 exactly when both factors lie in {1,c}. The negative table
// additionally places 1 at (a,b) for a,b outside {0,1,c}, and the triple
// (a,b,1) then violates associativity. The two differ in a single cell.
MagmaTable adversary_positive_table(int n, Element c);
MagmaTable adversary_negative_table(int n, Element c, Element a, Element b);

// Instance families keyed by their raw cell strings (one byte per cell).
struct MaterializedFamily {
    std::vector<std::string> positives;
    std::vector<std::string> negatives;
    int alphabet = 2;  // values each cell ranges over
};

struct AdversaryBound {
    std::uint64_t m = 0;        // min over positives of single-flip neighbors
    std::uint64_t m_prime = 0;  // min over negatives
    double bound = 0.0;         // sqrt(m * m_prime)
    bool exhaustive = true;
};

// Query lower bound sqrt(m * m') from the single-cell-flip relation between
// the two sides of a family. Degrees are found by enumerating every
// one-position rewrite of each instance against a hash set of the far side.
AdversaryBound compute_adversary_bound(const MaterializedFamily& family, std::size_t cap = 100'000'000);

// All positive tables (c ranges over n-2 values) and negative tables
// ((n-2)(n-3)^2 of them) for the associativity bound; m = (n-3)^2, m' = 1.
MaterializedFamily materialize_semigroup_family(int n, std::size_t cap = 1'000'000);

AdversaryBound semigroup_bound(int n, std::size_t cap = 1'000'000);

// All-ones-column search on a boolean matrix. Positive side: every column
// has exactly one zero. Negative side: exactly one all-ones column, every
// other column with exactly one zero. Flipping the lone zero of any column
// of a positive lands on a negative and vice versa, so m = m' = n.
bool one_column_positive_member(const BitMatrix& m);
bool one_column_negative_member(const BitMatrix& m);

MaterializedFamily materialize_one_column_family(int n, std::size_t cap = 1'000'000);

BitMatrix sample_one_column_instance(int n, bool positive, SplitMix64& rng);

// Exhaustive when both sides fit under the cap (the sides have n^n and
// n*n^{n-1} members); otherwise the degrees of seeded sample instances are
// counted exactly through the membership predicates and the known value n is
// returned with exhaustive=false.
AdversaryBound one_column_bound(int n, std::uint64_t seed = 0, std::size_t cap = 1'000'000);

// Order n+1 table with a fresh left-absorbing element 0 and x.y = x when
// matrix cell (x-1, y-1) is set, else 0. It has a right identity exactly
// when the matrix has an all-ones column.
MagmaTable reduce_identity(const BitMatrix& m);

// Order n table that degenerates to addition mod n when the matrix is the
// identity and breaks the Latin property otherwise: cell (i, n-1-i) holds
// n-1 when matrix cell (i,i) is set, else 0; off the anti-diagonal, cell
// (i,j) holds (i+j) mod n when matrix cell (i, n-1-j) is clear, else 0 or 1
// so as to dodge the value (i+j) mod n would have contributed. The table is
// a loop exactly when the matrix is the identity (for n >= 2).
MagmaTable reduce_loop(const BitMatrix& m);

}  // namespace magma
