#pragma once

#include <cstdint>

namespace magma {

// Splittable counter-based PRNG (splitmix64). Every randomized run records its
// seed, and derived streams are pure functions of (seed, stream index), so any
// experiment replays bit-identically.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 bits of entropy.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Lemire multiply-shift with debiasing;
    // deterministic across platforms.
    std::uint64_t below(std::uint64_t bound) {
        if (bound < 2) return 0;
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool coin(double p) { return next_double() < p; }

    // Independent stream derived from this generator's seed and a stream index.
    SplitMix64 split(std::uint64_t stream) const {
        SplitMix64 g(state_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
        g.next();
        return g;
    }

  private:
    std::uint64_t state_;
};

}  // namespace magma
