#pragma once

#include <optional>
#include <string>
#include <vector>

namespace magma {

// Elements of a magma are the integers 0..n-1 of its owning table.
using Element = int;

// A finite magma given by its full n x n multiplication table. The codomain is
// the declared value set M (a superset of the values that actually occur); the
// identity, when declared, is a claim checked on demand rather than assumed.
// Immutable after construction.
class MagmaTable {
  public:
    MagmaTable(int n, std::vector<Element> entries, std::vector<Element> codomain = {},
               std::optional<Element> identity = std::nullopt);

    int size() const { return n_; }

    Element at(Element i, Element j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    // Sorted, duplicate-free declared codomain M.
    const std::vector<Element>& codomain() const { return codomain_; }
    int codomain_size() const { return static_cast<int>(codomain_.size()); }
    bool in_codomain(Element x) const { return codomain_mask_[static_cast<std::size_t>(x)] != 0; }

    std::optional<Element> declared_identity() const { return identity_; }

    const std::vector<Element>& entries() const { return entries_; }

  private:
    int n_;
    std::vector<Element> entries_;  // row-major
    std::vector<Element> codomain_;
    std::vector<char> codomain_mask_;
    std::optional<Element> identity_;
};

enum class Property { Associative, RightIdentity, Group, Quasigroup, Loop };

std::string property_name(Property p);

// Verdict of a brute-force property check. The witness content depends on the
// property: a violating triple (a,b,c) for Associative; {axis, index} with
// axis 0=row / 1=col for a duplicate that breaks Quasigroup/Loop; the identity
// element for a holding Loop/RightIdentity; the offending element for a failed
// Group check.
struct PropertyReport {
    Property property;
    bool holds = false;
    std::vector<Element> witness;
};

enum class IdentitySide { Right, Left, TwoSided };
enum class InverseMode { RightRow, TwoSided };

// Pre-period/period structure of the power sequence a^1, a^2, ... where
// a^{i+1} = a^i * a. t is the first index whose value repeats an earlier
// power a^s (1 <= s < t); powers holds a^1..a^t. identity_power is the
// smallest i with a^i equal to the table's declared identity, when one is
// declared and reached.
struct OrderResult {
    int s = 0;
    int t = 0;
    std::vector<Element> powers;
    std::optional<int> identity_power;
};

// Direct O(n^3) check; witness is the lexicographically first violating triple.
PropertyReport is_associative(const MagmaTable& table);

// Smallest element satisfying the sided identity law, if any.
std::optional<Element> find_identity(const MagmaTable& table, IdentitySide side);

bool is_two_sided_identity(const MagmaTable& table, Element e);

// Latin-square check: every row and column a permutation of S.
PropertyReport is_quasigroup(const MagmaTable& table);

// Quasigroup with a two-sided identity.
PropertyReport is_loop(const MagmaTable& table);

// Associative, two-sided identity, and a two-sided inverse for every element.
PropertyReport is_group(const MagmaTable& table);

bool is_monoid(const MagmaTable& table);

OrderResult element_order(const MagmaTable& table, Element a);

// RightRow: e occurs in row a. TwoSided: some x has a*x = x*a = e.
// Throws PromiseViolation if e is not a two-sided identity.
bool has_inverse(const MagmaTable& table, Element a, Element e, InverseMode mode);

// Total number of violating triples (brute force); used by instance generators
// and their tests.
std::uint64_t count_associativity_witnesses(const MagmaTable& table);

}  // namespace magma
