#include "magma/instances.hpp"

#include <algorithm>
#include <optional>

#include "magma/errors.hpp"
#include "magma/rng.hpp"

namespace magma {

MagmaTable make_cyclic_group(int n) {
    if (n < 1) throw ParameterViolation("n must be positive");
    std::vector<Element> entries(static_cast<std::size_t>(n) * n);
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return MagmaTable(n, std::move(entries), {}, 0);
}

MagmaTable make_monoid_with_absorber(int n) {
    if (n < 2) throw ParameterViolation("n must be at least 2");
    const int top = n - 1;
    std::vector<Element> entries(static_cast<std::size_t>(n) * n, top);
    for (Element i = 0; i < top; ++i)
        for (Element j = 0; j < top; ++j) entries[static_cast<std::size_t>(i) * n + j] = (i + j) % top;
    return MagmaTable(n, std::move(entries), {}, 0);
}

MagmaTable make_truncated_add_monoid(int n) {
    if (n < 1) throw ParameterViolation("n must be positive");
    std::vector<Element> entries(static_cast<std::size_t>(n) * n);
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j)
            entries[static_cast<std::size_t>(i) * n + j] = std::min(i + j, n - 1);
    return MagmaTable(n, std::move(entries), {}, 0);
}

MagmaTable make_single_witness_table(int n, std::uint64_t seed) {
    if (n < 3) throw ParameterViolation("n must be at least 3");
    SplitMix64 rng(seed);
    const Element u = 2 + static_cast<Element>(rng.below(static_cast<std::uint64_t>(n - 2)));
    std::vector<Element> entries(static_cast<std::size_t>(n) * n, 0);
    entries[static_cast<std::size_t>(u) * n + 1] = 1;
    return MagmaTable(n, std::move(entries));
}

MagmaTable make_direct_product(const MagmaTable& a, const MagmaTable& b) {
    const int na = a.size(), nb = b.size();
    const int n = na * nb;
    std::vector<Element> entries(static_cast<std::size_t>(n) * n);
    for (Element i1 = 0; i1 < na; ++i1)
        for (Element j1 = 0; j1 < nb; ++j1)
            for (Element i2 = 0; i2 < na; ++i2)
                for (Element j2 = 0; j2 < nb; ++j2) {
                    const Element x = i1 * nb + j1;
                    const Element y = i2 * nb + j2;
                    entries[static_cast<std::size_t>(x) * n + y] = a.at(i1, i2) * nb + b.at(j1, j2);
                }
    std::optional<Element> id;
    if (a.declared_identity() && b.declared_identity()) id = *a.declared_identity() * nb + *b.declared_identity();
    return MagmaTable(n, std::move(entries), {}, id);
}

MagmaTable relabel(const MagmaTable& table, const std::vector<Element>& perm) {
    const int n = table.size();
    if (static_cast<int>(perm.size()) != n) throw ParameterViolation("permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Element p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw ParameterViolation("not a permutation of [0,n)");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<Element> entries(static_cast<std::size_t>(n) * n);
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) {
            const Element pi = perm[static_cast<std::size_t>(i)];
            const Element pj = perm[static_cast<std::size_t>(j)];
            entries[static_cast<std::size_t>(pi) * n + pj] = perm[static_cast<std::size_t>(table.at(i, j))];
        }
    std::vector<Element> codomain;
    for (Element x : table.codomain()) codomain.push_back(perm[static_cast<std::size_t>(x)]);
    std::optional<Element> id;
    if (table.declared_identity()) id = perm[static_cast<std::size_t>(*table.declared_identity())];
    return MagmaTable(n, std::move(entries), std::move(codomain), id);
}

std::vector<Element> random_permutation(int n, std::uint64_t seed) {
    if (n < 1) throw ParameterViolation("n must be positive");
    SplitMix64 rng(seed);
    std::vector<Element> perm(static_cast<std::size_t>(n));
    for (Element i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const auto j = rng.below(static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

MagmaTable make_random_monoid(int n, std::uint64_t seed) {
    if (n < 1) throw ParameterViolation("n must be positive");
    SplitMix64 rng(seed);
    std::vector<MagmaTable> shapes;
    shapes.push_back(make_cyclic_group(n));
    if (n >= 2) {
        shapes.push_back(make_monoid_with_absorber(n));
        shapes.push_back(make_truncated_add_monoid(n));
    }
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) shapes.push_back(make_direct_product(make_cyclic_group(d), make_cyclic_group(n / d)));
    const auto& pick = shapes[static_cast<std::size_t>(rng.below(shapes.size()))];
    return relabel(pick, random_permutation(n, rng.next()));
}

BitMatrix make_random_bit_matrix(int n, std::uint64_t seed, double density) {
    if (n < 1) throw ParameterViolation("n must be positive");
    if (density < 0.0 || density > 1.0) throw ParameterViolation("density must lie in [0,1]");
    SplitMix64 rng(seed);
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rng.coin(density));
    return m;
}

}  // namespace magma
