#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace euclidzi {

/*
 * Coordinates are kept strictly below 2^62 in magnitude so that the sum or
 * difference of two in-range coordinates always fits in a signed 64-bit word.
 * Multiplication by 1+i maps (a, b) to (a-b, a+b), so that is exactly the
 * headroom it needs. Arithmetic that would push a coordinate to the cap
 * throws std::overflow_error instead of wrapping.
 */
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 62;

/** A Gaussian integer re + im*i. Ordering is lexicographic by (re, im). */
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr bool is_zero() const noexcept { return re == 0 && im == 0; }

    auto operator<=>(const GaussianInt&) const = default;

    GaussianInt operator+(GaussianInt o) const;
    GaussianInt operator-(GaussianInt o) const;
    constexpr GaussianInt operator-() const noexcept { return {-re, -im}; }
};

/** Build a value, checking both coordinates against the range cap. */
GaussianInt make_gaussian(std::int64_t re, std::int64_t im);

// Magnitude of one coordinate as an unsigned word (total, no UB on INT64_MIN,
// though in-range values never get near it).
constexpr std::uint64_t abs_coord(std::int64_t c) noexcept {
    const auto u = static_cast<std::uint64_t>(c);
    return c < 0 ? std::uint64_t{0} - u : u;
}

/** The four units of Z[i]. */
enum class Unit : std::uint8_t { one, minus_one, i, minus_i };

constexpr GaussianInt unit_value(Unit u) noexcept {
    switch (u) {
        case Unit::one:       return {1, 0};
        case Unit::minus_one: return {-1, 0};
        case Unit::i:         return {0, 1};
        default:              return {0, -1};
    }
}

constexpr Unit unit_inverse(Unit u) noexcept {
    if (u == Unit::i) return Unit::minus_i;
    if (u == Unit::minus_i) return Unit::i;
    return u;
}

/** Exact product by a unit: u = i maps (a, b) to (-b, a). */
GaussianInt mul_unit(GaussianInt g, Unit u);

constexpr GaussianInt conj(GaussianInt g) noexcept { return {g.re, -g.im}; }

/**
 * One of the eight symmetries of the lattice: g maps to
 * unit * (conjugated ? conj(g) : g). Composable and exactly invertible.
 */
struct UnitTransform {
    Unit unit = Unit::one;
    bool conjugated = false;

    GaussianInt apply(GaussianInt g) const;
    UnitTransform inverse() const;

    constexpr bool operator==(const UnitTransform&) const = default;
};

/** (a, b) -> (a-b, a+b); throws std::overflow_error if a coordinate escapes. */
GaussianInt mul_one_plus_i(GaussianInt g);

/**
 * Exact quotient by 1+i: (a, b) -> ((a+b)/2, (b-a)/2). Divisibility by 1+i is
 * equivalent to a+b being even; std::domain_error otherwise.
 */
GaussianInt div_one_plus_i(GaussianInt g);

/**
 * Largest j with 2^j dividing both coordinates (a zero coordinate imposes no
 * constraint). std::domain_error at 0, which every power of two divides.
 */
int two_valuation(GaussianInt g);

/**
 * Rotate/reflect g into the closed half-octant re >= im >= 0 and report the
 * transform that got it there. The transform is searched in a fixed order
 * (identity first), so ties resolve deterministically.
 */
std::pair<GaussianInt, UnitTransform> octant_normalize(GaussianInt g);

/**
 * Parse a literal such as "90+44i", "-i", "5" or "44i". Grammar:
 * [sign] dec | [sign] [dec] "i" | [sign] dec sign [dec] "i", where an omitted
 * dec before "i" means 1; surrounding spaces are allowed. Malformed text
 * throws std::invalid_argument, out-of-range magnitudes std::overflow_error.
 */
GaussianInt parse_gaussian(std::string_view text);

/** Canonical text form: "a+bi", "a-bi", "a", "bi", "i", "-i", "0". */
std::string format_gaussian(GaussianInt g);

}  // namespace euclidzi
