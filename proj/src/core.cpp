#include "magma/core.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "magma/errors.hpp"

namespace magma {

MagmaTable::MagmaTable(int n, std::vector<Element> entries, std::vector<Element> codomain,
                       std::optional<Element> identity)
    : n_(n), entries_(std::move(entries)), codomain_(std::move(codomain)), identity_(identity) {
    if (n_ < 1) throw std::invalid_argument("table order must be positive");
    if (entries_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("entry count does not match table order");
    for (Element v : entries_)
        if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");

    if (codomain_.empty()) {
        // Default codomain: exactly the values that occur.
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (Element v : entries_) seen[static_cast<std::size_t>(v)] = 1;
        for (Element v = 0; v < n_; ++v)
            if (seen[static_cast<std::size_t>(v)]) codomain_.push_back(v);
    }
    std::sort(codomain_.begin(), codomain_.end());
    codomain_.erase(std::unique(codomain_.begin(), codomain_.end()), codomain_.end());
    for (Element v : codomain_)
        if (v < 0 || v >= n_) throw std::invalid_argument("codomain element out of range");

    codomain_mask_.assign(static_cast<std::size_t>(n_), 0);
    for (Element v : codomain_) codomain_mask_[static_cast<std::size_t>(v)] = 1;
    for (Element v : entries_)
        if (!codomain_mask_[static_cast<std::size_t>(v)])
            throw std::invalid_argument("entry value " + std::to_string(v) +
                                        " missing from declared codomain");

    if (identity_ && (*identity_ < 0 || *identity_ >= n_))
        throw std::invalid_argument("declared identity out of range");
}

std::string property_name(Property p) {
    switch (p) {
        case Property::Associative: return "associative";
        case Property::RightIdentity: return "right-identity";
        case Property::Group: return "group";
        case Property::Quasigroup: return "quasigroup";
        case Property::Loop: return "loop";
    }
    return "?";
}

PropertyReport is_associative(const MagmaTable& table) {
    const int n = table.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = table.at(a, b);
            for (Element c = 0; c < n; ++c)
                if (table.at(ab, c) != table.at(a, table.at(b, c)))
                    return {Property::Associative, false, {a, b, c}};
        }
    return {Property::Associative, true, {}};
}

std::uint64_t count_associativity_witnesses(const MagmaTable& table) {
    const int n = table.size();
    std::uint64_t count = 0;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = table.at(a, b);
            for (Element c = 0; c < n; ++c)
                if (table.at(ab, c) != table.at(a, table.at(b, c))) ++count;
        }
    return count;
}

namespace {

bool satisfies_identity(const MagmaTable& table, Element e, IdentitySide side) {
    const int n = table.size();
    for (Element x = 0; x < n; ++x) {
        if (side != IdentitySide::Left && table.at(x, e) != x) return false;
        if (side != IdentitySide::Right && table.at(e, x) != x) return false;
    }
    return true;
}

// Returns {axis, index} of the first row (axis 0) or column (axis 1) that is
// not a permutation, or nullopt.
std::optional<std::pair<int, int>> first_latin_violation(const MagmaTable& table) {
    const int n = table.size();
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            const Element v = table.at(i, j);
            if (seen[static_cast<std::size_t>(v)]) return {{0, i}};
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            const Element v = table.at(i, j);
            if (seen[static_cast<std::size_t>(v)]) return {{1, j}};
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Element> find_identity(const MagmaTable& table, IdentitySide side) {
    for (Element e = 0; e < table.size(); ++e)
        if (satisfies_identity(table, e, side)) return e;
    return std::nullopt;
}

bool is_two_sided_identity(const MagmaTable& table, Element e) {
    if (e < 0 || e >= table.size()) return false;
    return satisfies_identity(table, e, IdentitySide::TwoSided);
}

PropertyReport is_quasigroup(const MagmaTable& table) {
    if (auto v = first_latin_violation(table)) return {Property::Quasigroup, false, {v->first, v->second}};
    return {Property::Quasigroup, true, {}};
}

PropertyReport is_loop(const MagmaTable& table) {
    if (auto v = first_latin_violation(table)) return {Property::Loop, false, {v->first, v->second}};
    auto e = find_identity(table, IdentitySide::TwoSided);
    if (!e) return {Property::Loop, false, {}};
    return {Property::Loop, true, {*e}};
}

PropertyReport is_group(const MagmaTable& table) {
    auto assoc = is_associative(table);
    if (!assoc.holds) return {Property::Group, false, assoc.witness};
    auto e = find_identity(table, IdentitySide::TwoSided);
    if (!e) return {Property::Group, false, {}};
    const int n = table.size();
    for (Element a = 0; a < n; ++a)
        if (!has_inverse(table, a, *e, InverseMode::TwoSided)) return {Property::Group, false, {a}};
    return {Property::Group, true, {*e}};
}

bool is_monoid(const MagmaTable& table) {
    return is_associative(table).holds && find_identity(table, IdentitySide::TwoSided).has_value();
}

OrderResult element_order(const MagmaTable& table, Element a) {
    if (a < 0 || a >= table.size()) throw ParameterViolation("element out of range");
    const int n = table.size();
    OrderResult result;
    // first_seen[v] = power index at which value v first appeared, 0 = unseen.
    std::vector<int> first_seen(static_cast<std::size_t>(n), 0);
    const auto e = table.declared_identity();
    Element cur = a;
    for (int i = 1;; ++i) {
        result.powers.push_back(cur);
        if (e && cur == *e && !result.identity_power) result.identity_power = i;
        int& slot = first_seen[static_cast<std::size_t>(cur)];
        if (slot != 0) {
            result.s = slot;
            result.t = i;
            return result;  // t <= n+1 by pigeonhole
        }
        slot = i;
        cur = table.at(cur, a);
    }
}

bool has_inverse(const MagmaTable& table, Element a, Element e, InverseMode mode) {
    if (a < 0 || a >= table.size()) throw ParameterViolation("element out of range");
    if (!is_two_sided_identity(table, e))
        throw PromiseViolation("element " + std::to_string(e) + " is not a two-sided identity");
    const int n = table.size();
    if (mode == InverseMode::RightRow) {
        for (Element x = 0; x < n; ++x)
            if (table.at(a, x) == e) return true;
        return false;
    }
    for (Element x = 0; x < n; ++x)
        if (table.at(a, x) == e && table.at(x, a) == e) return true;
    return false;
}

}  // namespace magma
