#pragma once

#include <cstdint>

#include "euclidzi/gaussian.hpp"
#include "euclidzi/mixer.hpp"

namespace testsupport {

// Uniform coordinate in [-(2^bits - 1), 2^bits - 1]; bits <= 61.
inline std::int64_t random_coord(euclidzi::SplitMix64& rng, int bits) {
    const std::uint64_t span = (std::uint64_t{2} << bits) - 1;
    return static_cast<std::int64_t>(rng.next() % span) -
           ((std::int64_t{1} << bits) - 1);
}

inline euclidzi::GaussianInt random_point(euclidzi::SplitMix64& rng, int bits) {
    const std::int64_t re = random_coord(rng, bits);
    const std::int64_t im = random_coord(rng, bits);
    return euclidzi::make_gaussian(re, im);
}

inline euclidzi::GaussianInt random_nonzero(euclidzi::SplitMix64& rng, int bits) {
    for (;;) {
        const euclidzi::GaussianInt g = random_point(rng, bits);
        if (!g.is_zero()) return g;
    }
}

}  // namespace testsupport
