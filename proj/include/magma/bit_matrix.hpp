#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace magma {

// Square 0-1 matrix, the input shape of the lower-bound instance families and
// the reduction targets.
struct BitMatrix {
    int n = 0;
    std::vector<std::uint8_t> bits;  // row-major

    BitMatrix() = default;
    explicit BitMatrix(int order) : n(order), bits(static_cast<std::size_t>(order) * order, 0) {
        if (order < 1) throw std::invalid_argument("matrix order must be positive");
    }

    std::uint8_t at(int i, int j) const { return bits[static_cast<std::size_t>(i) * n + j]; }
    void set(int i, int j, std::uint8_t v) { bits[static_cast<std::size_t>(i) * n + j] = v ? 1 : 0; }

    static BitMatrix identity(int order) {
        BitMatrix m(order);
        for (int i = 0; i < order; ++i) m.set(i, i, 1);
        return m;
    }

    // Row-major '0'/'1' string, the key form used by the flip-enumeration sets.
    std::string to_key() const {
        std::string key(bits.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) key[i] = '1';
        return key;
    }

    bool operator==(const BitMatrix& other) const = default;
};

}  // namespace magma
