#pragma once

#include <cstdint>

namespace permident {

// SplitMix64. Update constant 0x9E3779B97F4A7C15 (the 64-bit golden ratio),
// finalizer constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts
// 30/27/31. Identical seeds reproduce identical streams on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [lo, hi], inclusive. The modulo bias is below 2^-57
    // for the tiny spans used here.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }
};

// SplitMix64 finalizer as a standalone mixer, used to derive independent
// per-trial seeds from (seed, identity, n, trial) so results do not depend
// on scheduling order.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t n, std::uint64_t trial) {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
    h = mix64(h ^ (stream * 0xFF51AFD7ED558CCDULL));
    h = mix64(h ^ (n * 0xC4CEB9FE1A85EC53ULL));
    h = mix64(h ^ (trial * 0x2545F4914F6CDD1DULL));
    return h;
}

} // namespace permident
