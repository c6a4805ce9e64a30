#pragma once

#include <cstdint>

namespace euclidzi {

// Growth sequence 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, ...
// w(2k) = 3 * 2^k and w(2k+1) = 2^(k+2), hence w(n+2) = 2 * w(n).
// Defined for 0 <= n <= 124 (the last index whose value fits in 64 bits).
std::uint64_t w(int n);

// Least m with x <= w(m) - 2, for x >= 1. Plain upward scan; this is the
// reference semantics the bit-twiddling path in phi_fast must reproduce.
int min_snowflake_index(std::uint64_t x);

}  // namespace euclidzi
