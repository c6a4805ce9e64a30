#include "euclidzi/gaussian.hpp"

#include <bit>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace euclidzi {

namespace {

std::int64_t checked(std::int64_t v) {
    if (v >= kCoordLimit || v <= -kCoordLimit)
        throw std::overflow_error("gaussian coordinate magnitude must stay below 2^62");
    return v;
}

constexpr bool in_range(GaussianInt g) noexcept {
    return g.re > -kCoordLimit && g.re < kCoordLimit &&
           g.im > -kCoordLimit && g.im < kCoordLimit;
}

}  // namespace

GaussianInt GaussianInt::operator+(GaussianInt o) const {
    return {checked(re + o.re), checked(im + o.im)};
}

GaussianInt GaussianInt::operator-(GaussianInt o) const {
    return {checked(re - o.re), checked(im - o.im)};
}

GaussianInt make_gaussian(std::int64_t re, std::int64_t im) {
    return {checked(re), checked(im)};
}

GaussianInt mul_unit(GaussianInt g, Unit u) {
    assert(in_range(g));
    switch (u) {
        case Unit::one:       return g;
        case Unit::minus_one: return {-g.re, -g.im};
        case Unit::i:         return {-g.im, g.re};
        default:              return {g.im, -g.re};
    }
}

GaussianInt UnitTransform::apply(GaussianInt g) const {
    return mul_unit(conjugated ? conj(g) : g, unit);
}

UnitTransform UnitTransform::inverse() const {
    // Inverting u * conj(g) conjugates the unit back onto itself, so a
    // conjugating transform is its own inverse.
    return {conjugated ? unit : unit_inverse(unit), conjugated};
}

GaussianInt mul_one_plus_i(GaussianInt g) {
    return {checked(g.re - g.im), checked(g.re + g.im)};
}

GaussianInt div_one_plus_i(GaussianInt g) {
    if ((g.re + g.im) % 2 != 0)
        throw std::domain_error("not divisible by 1+i");
    return {(g.re + g.im) / 2, (g.im - g.re) / 2};
}

int two_valuation(GaussianInt g) {
    if (g.is_zero())
        throw std::domain_error("zero has no two-valuation");
    const auto bits = static_cast<std::uint64_t>(g.re) | static_cast<std::uint64_t>(g.im);
    return std::countr_zero(bits);
}

std::pair<GaussianInt, UnitTransform> octant_normalize(GaussianInt g) {
    static constexpr Unit kUnits[] = {Unit::one, Unit::minus_one, Unit::i, Unit::minus_i};
    for (const bool c : {false, true}) {
        for (const Unit u : kUnits) {
            const UnitTransform t{u, c};
            const GaussianInt image = t.apply(g);
            if (image.re >= image.im && image.im >= 0) return {image, t};
        }
    }
    // The eight images of any point cover every closed half-octant.
    throw std::logic_error("octant_normalize: no transform matched");
}

namespace {

// One term of a literal: optional sign, optional digit run, optional 'i'.
struct Term {
    bool negative = false;
    bool has_digits = false;
    bool imaginary = false;
    std::uint64_t magnitude = 0;
};

bool read_term(std::string_view s, std::size_t& pos, bool require_sign, Term& out) {
    out = Term{};
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        out.negative = s[pos] == '-';
        ++pos;
    } else if (require_sign) {
        return false;
    }
    const std::size_t digits_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos > digits_begin) {
        out.has_digits = true;
        const auto res = std::from_chars(s.data() + digits_begin, s.data() + pos, out.magnitude);
        if (res.ec == std::errc::result_out_of_range ||
            out.magnitude >= static_cast<std::uint64_t>(kCoordLimit))
            throw std::overflow_error("gaussian literal out of range");
    }
    if (pos < s.size() && s[pos] == 'i') {
        out.imaginary = true;
        if (!out.has_digits) out.magnitude = 1;
        ++pos;
    }
    return out.has_digits || out.imaginary;
}

std::int64_t signed_value(const Term& t) {
    const auto v = static_cast<std::int64_t>(t.magnitude);
    return t.negative ? -v : v;
}

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && text[begin] == ' ') ++begin;
    while (end > begin && text[end - 1] == ' ') --end;
    const std::string_view s = text.substr(begin, end - begin);

    std::size_t pos = 0;
    Term first;
    if (!read_term(s, pos, false, first))
        throw std::invalid_argument("malformed gaussian literal");

    if (pos == s.size()) {
        if (first.imaginary) return {0, signed_value(first)};
        return {signed_value(first), 0};
    }

    Term second;
    if (first.imaginary || !read_term(s, pos, true, second) || !second.imaginary ||
        pos != s.size())
        throw std::invalid_argument("malformed gaussian literal");
    return {signed_value(first), signed_value(second)};
}

std::string format_gaussian(GaussianInt g) {
    if (g.im == 0) return std::to_string(g.re);
    std::string s;
    if (g.re != 0) {
        s = std::to_string(g.re);
        if (g.im > 0) s += '+';
    }
    if (g.im == 1)
        s += 'i';
    else if (g.im == -1)
        s += "-i";
    else {
        s += std::to_string(g.im);
        s += 'i';
    }
    return s;
}

}  // namespace euclidzi
