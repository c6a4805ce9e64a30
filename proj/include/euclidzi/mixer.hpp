#pragma once

#include <cstdint>

namespace euclidzi {

// splitmix64: tiny seedable generator used for reproducible benchmark and
// test streams. Same seed, same stream, on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace euclidzi
