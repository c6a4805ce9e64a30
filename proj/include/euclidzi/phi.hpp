#pragma once

#include <cstdint>

#include "euclidzi/gaussian.hpp"

namespace euclidzi {

enum class PhiBranch : std::uint8_t { low, high };

/**
 * Intermediates of a phi evaluation, kept around for explanation output.
 *
 * Writing A = max(|a|,|b|) / 2^j and B = min(|a|,|b|) / 2^j after dividing
 * out the common power of two 2^j:
 *   m      least index with A <= w(m) - 2
 *   p      floor(log2(A + 2)), the bit-length shortcut behind phi_fast
 *   branch low when A + B <= w(m+1) - 3, high otherwise
 * and phi = m + 2j on the low branch, m + 2j + 1 on the high one.
 */
struct PhiBreakdown {
    int j = 0;
    int m = 0;
    int p = 0;
    PhiBranch branch = PhiBranch::low;
    int phi = 0;
};

/**
 * Length minus one of a shortest base-(1+i) expansion of g; equivalently the
 * minimal Euclidean function of Z[i] at g. Undefined at 0 (std::domain_error).
 */
int phi(GaussianInt g);

PhiBreakdown phi_breakdown(GaussianInt g);

/** Same value as phi, using only bit counts, shifts and comparisons. */
int phi_fast(GaussianInt g);

}  // namespace euclidzi
