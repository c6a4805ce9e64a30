#pragma once

#include <cstdint>
#include <vector>

#include "euclidzi/gaussian.hpp"

namespace euclidzi {

/*
 * The three region families on the lattice, indexed by n >= 0:
 *
 *   S(n)  "snowflake": points x+yi != 0 with gcd(x, y) odd,
 *         |x|, |y| <= w(n) - 2 and |x| + |y| <= w(n+1) - 3
 *   D(n)  "doily": same box, but the condition is x + y odd
 *         (equivalently, not divisible by 1+i)
 *   B(n)  points whose base-(1+i) expansions fit in positions 0..n;
 *         contains 0, and its nonzero part splits into scaled copies of
 *         the other two families.
 */
enum class RegionKind : std::uint8_t { S, D, B };
enum class DecompScheme : std::uint8_t { snowflake, doily };

struct RegionSpec {
    RegionKind kind = RegionKind::S;
    int n = 0;

    constexpr bool operator==(const RegionSpec&) const = default;
};

/** One layer of a decomposition: the point set scale * {region points}. */
struct LayerTerm {
    GaussianInt scale;  // 2^h or 2^h * (1+i)
    RegionSpec spec;

    constexpr bool operator==(const LayerTerm&) const = default;
};

bool in_S(GaussianInt g, int n);
bool in_D(GaussianInt g, int n);
bool in_B(GaussianInt g, int n);

/**
 * The exact layer list whose point sets partition B(n) \ {0}:
 * snowflake scheme: 2^j * S(n-2j) for j = 0..n/2;
 * doily scheme: (1+i)^j * D(n-j) for j = 0..n, with the scale stored as the
 * canonical associate 2^(j/2) or 2^(j/2)*(1+i) (the sets are unit-closed).
 */
std::vector<LayerTerm> layer_decomposition(int n, DecompScheme scheme);

/** Multiply a region point by the layer's scale (exact, overflow-checked). */
GaussianInt apply_layer_scale(const LayerTerm& term, GaussianInt p);

/** Index of the layer containing g, for g != 0 with in_B(g, n). */
int decomposition_layer(GaussianInt g, int n, DecompScheme scheme);

/**
 * All points of the region, sorted lexicographically by (re, im). The B kind
 * includes 0. Throws std::length_error when the bounding box would exceed
 * 10^8 candidate points (n >= 22).
 */
std::vector<GaussianInt> enumerate_region(RegionSpec spec);

}  // namespace euclidzi
