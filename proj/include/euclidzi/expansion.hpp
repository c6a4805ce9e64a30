#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euclidzi/gaussian.hpp"

namespace euclidzi {

/** Base-(1+i) digit: 0 or a unit. */
enum class Digit : std::uint8_t { zero, plus_one, minus_one, plus_i, minus_i };

constexpr GaussianInt digit_value(Digit d) noexcept {
    switch (d) {
        case Digit::zero:      return {0, 0};
        case Digit::plus_one:  return {1, 0};
        case Digit::minus_one: return {-1, 0};
        case Digit::plus_i:    return {0, 1};
        default:               return {0, -1};
    }
}

/**
 * Digit sequence of a base-(1+i) expansion, most significant digit first.
 * Minimal expansions of nonzero values have length phi(value) + 1 and a
 * nonzero leading digit; 0 is written as the single digit [0].
 */
struct Expansion {
    std::vector<Digit> digits;

    bool operator==(const Expansion&) const = default;
};

/**
 * Top term of a minimal expansion of g, where n must equal phi(g): returns
 * the value u*(1+i)^n to subtract and the digit u. Subtracting it strictly
 * lowers phi (or reaches 0). std::invalid_argument if n != phi(g).
 */
std::pair<GaussianInt, Digit> leading_term(GaussianInt g, int n);

/** Shortest-possible digit sequence for g, deterministic branch choices. */
Expansion minimal_expansion(GaussianInt g);

/** Horner evaluation; the empty sequence is 0. Checked arithmetic throughout. */
GaussianInt eval_expansion(const Expansion& e);

// Text codec: '0' 0, '1' +1, 'n' -1, 'i' +i, 'm' -i, most significant first.
std::string digits_to_text(const Expansion& e);
Expansion text_to_digits(std::string_view text);  // std::invalid_argument on bad chars

}  // namespace euclidzi
