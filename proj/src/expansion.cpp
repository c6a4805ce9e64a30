#include "euclidzi/expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "euclidzi/phi.hpp"

namespace euclidzi {

namespace {

// Units as powers of i: exponent 0..3 stands for 1, i, -1, -i.
constexpr Digit digit_from_exponent(int e) noexcept {
    switch (e & 3) {
        case 0:  return Digit::plus_one;
        case 1:  return Digit::plus_i;
        case 2:  return Digit::minus_one;
        default: return Digit::minus_i;
    }
}

}  // namespace

/*
 * A shortest expansion of g with phi(g) = n can always start with a
 * subtrahend u*(1+i)^n of a very particular shape: for even n = 2k it is one
 * of the four axis points +-2^k, +-2^k i, and for odd n = 2k+1 one of the
 * four diagonal points +-2^k(1+i), +-2^k(1-i). Any candidate lying in the
 * closed half-plane around g works (the leftover provably needs fewer
 * positions), and the tests below try the four candidates in a fixed order
 * so that output digits are reproducible.
 *
 * The digit is the subtrahend divided by (1+i)^n. Since (1+i)^2 = 2i, that
 * quotient is the candidate's unit times i^(-k), computed here on exponents.
 */
std::pair<GaussianInt, Digit> leading_term(GaussianInt g, int n) {
    if (g.is_zero()) throw std::domain_error("leading_term needs a nonzero value");
    if (n != phi(g)) throw std::invalid_argument("leading_term needs n = phi(g)");

    const int k = n / 2;
    const std::int64_t s = std::int64_t{1} << k;  // phi <= 123 keeps k <= 61
    GaussianInt sub;
    int unit_exp = 0;
    if (n % 2 == 0) {
        if (g.im <= g.re && -g.im <= g.re) {
            sub = {s, 0};
            unit_exp = 0;
        } else if (g.im <= -g.re && -g.im <= -g.re) {
            sub = {-s, 0};
            unit_exp = 2;
        } else if (g.re <= -g.im && -g.re <= -g.im) {
            sub = {0, -s};
            unit_exp = 3;
        } else {
            sub = {0, s};
            unit_exp = 1;
        }
    } else {
        if (g.re >= 0 && g.im >= 0) {
            sub = {s, s};
            unit_exp = 0;
        } else if (g.re <= 0 && g.im <= 0) {
            sub = {-s, -s};
            unit_exp = 2;
        } else if (g.re >= 0) {
            sub = {s, -s};
            unit_exp = 3;
        } else {
            sub = {-s, s};
            unit_exp = 1;
        }
    }
    return {sub, digit_from_exponent(unit_exp - k)};
}

Expansion minimal_expansion(GaussianInt g) {
    if (g.is_zero()) return {{Digit::zero}};

    int level = phi(g);
    std::vector<Digit> digits(static_cast<std::size_t>(level) + 1, Digit::zero);
    GaussianInt rest = g;
    while (true) {
        const auto [sub, digit] = leading_term(rest, level);
        digits[static_cast<std::size_t>(level)] = digit;  // position-indexed for now
        rest = rest - sub;
        if (rest.is_zero()) break;
        const int next = phi(rest);
        if (next >= level)
            throw std::logic_error("expansion step failed to lower phi");
        level = next;
    }
    std::reverse(digits.begin(), digits.end());
    return {std::move(digits)};
}

GaussianInt eval_expansion(const Expansion& e) {
    GaussianInt v;
    for (const Digit d : e.digits) v = mul_one_plus_i(v) + digit_value(d);
    return v;
}

namespace {

constexpr char kDigitChars[] = {'0', '1', 'n', 'i', 'm'};

}  // namespace

std::string digits_to_text(const Expansion& e) {
    std::string out;
    out.reserve(e.digits.size());
    for (const Digit d : e.digits) out += kDigitChars[static_cast<std::size_t>(d)];
    return out;
}

Expansion text_to_digits(std::string_view text) {
    Expansion out;
    out.digits.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '0': out.digits.push_back(Digit::zero); break;
            case '1': out.digits.push_back(Digit::plus_one); break;
            case 'n': out.digits.push_back(Digit::minus_one); break;
            case 'i': out.digits.push_back(Digit::plus_i); break;
            case 'm': out.digits.push_back(Digit::minus_i); break;
            default:
                throw std::invalid_argument(std::string("bad digit character '") + c + "'");
        }
    }
    return out;
}

}  // namespace euclidzi
