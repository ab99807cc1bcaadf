#pragma once

#include <cstdint>

#include "magma/bit_matrix.hpp"
#include "magma/core.hpp"

namespace magma {

// Addition mod n with identity 0 declared.
MagmaTable make_cyclic_group(int n);

// Addition mod n-1 on {0..n-2} with an absorbing top element n-1 adjoined.
// A monoid with identity 0 that is not a group; n >= 2.
MagmaTable make_monoid_with_absorber(int n);

// Truncated addition min(i+j, n-1): a commutative monoid, not a group for
// n >= 2.
MagmaTable make_truncated_add_monoid(int n);

// All-zero table except one cell (u,1) holding 1, with u >= 2 drawn from the
// seed. Exactly one associativity violation exists: the triple (u, u, 1).
MagmaTable make_single_witness_table(int n, std::uint64_t seed);

// Componentwise product on pairs, indexed i*|B|+j.
MagmaTable make_direct_product(const MagmaTable& a, const MagmaTable& b);

// Conjugates the table by a permutation: perm(i).perm(j) = perm(i.j).
MagmaTable relabel(const MagmaTable& table, const std::vector<Element>& perm);

// Random permutation of [0,n).
std::vector<Element> random_permutation(int n, std::uint64_t seed);

// A monoid of order n drawn from a family of shapes (cyclic, absorber,
// truncated, products of cyclic factors), then relabeled at random.
MagmaTable make_random_monoid(int n, std::uint64_t seed);

BitMatrix make_random_bit_matrix(int n, std::uint64_t seed, double density = 0.5);

}  // namespace magma
