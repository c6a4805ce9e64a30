#include "euclidzi/regions.hpp"

#include <stdexcept>

#include "euclidzi/growth.hpp"

namespace euclidzi {

namespace {

constexpr std::uint64_t kNoBound = ~std::uint64_t{0};

// w(n) - 2, saturating: from n = 124 on, every in-range coordinate fits the
// box anyway, so membership degenerates to the parity condition alone.
std::uint64_t box_bound(int n) {
    return n >= 124 ? kNoBound : w(n) - 2;
}

std::uint64_t cross_bound(int n) {
    return n >= 123 ? kNoBound : w(n + 1) - 3;
}

bool in_box(GaussianInt g, int n) {
    const std::uint64_t x = abs_coord(g.re);
    const std::uint64_t y = abs_coord(g.im);
    return x <= box_bound(n) && y <= box_bound(n) && x + y <= cross_bound(n);
}

}  // namespace

bool in_S(GaussianInt g, int n) {
    if (n < 0 || g.is_zero()) return false;
    const bool odd_gcd = ((g.re | g.im) & 1) != 0;
    return odd_gcd && in_box(g, n);
}

bool in_D(GaussianInt g, int n) {
    if (n < 0) return false;
    return ((g.re + g.im) & 1) != 0 && in_box(g, n);
}

bool in_B(GaussianInt g, int n) {
    if (n < 0) return false;
    if (g.is_zero()) return true;
    const int v = two_valuation(g);
    return n >= 2 * v && in_S({g.re >> v, g.im >> v}, n - 2 * v);
}

std::vector<LayerTerm> layer_decomposition(int n, DecompScheme scheme) {
    if (n < 0) throw std::out_of_range("decomposition index must be nonnegative");
    std::vector<LayerTerm> layers;
    if (scheme == DecompScheme::snowflake) {
        for (int j = 0; 2 * j <= n; ++j) {
            const std::int64_t s = std::int64_t{1} << j;
            layers.push_back({{s, 0}, {RegionKind::S, n - 2 * j}});
        }
    } else {
        for (int j = 0; j <= n; ++j) {
            const std::int64_t s = std::int64_t{1} << (j / 2);
            layers.push_back({{s, j % 2 == 0 ? 0 : s}, {RegionKind::D, n - j}});
        }
    }
    return layers;
}

GaussianInt apply_layer_scale(const LayerTerm& term, GaussianInt p) {
    if (term.scale.im != 0 && term.scale.im != term.scale.re)
        throw std::invalid_argument("layer scale must be 2^h or 2^h*(1+i)");
    const std::int64_t s = term.scale.re;
    std::int64_t re = 0, im = 0;
    if (__builtin_mul_overflow(p.re, s, &re) || __builtin_mul_overflow(p.im, s, &im))
        throw std::overflow_error("gaussian coordinate magnitude must stay below 2^62");
    GaussianInt out = make_gaussian(re, im);
    if (term.scale.im != 0) out = mul_one_plus_i(out);
    return out;
}

int decomposition_layer(GaussianInt g, int n, DecompScheme scheme) {
    if (g.is_zero() || !in_B(g, n))
        throw std::domain_error("point is not in the decomposed set");
    if (scheme == DecompScheme::snowflake) return two_valuation(g);
    int j = 0;
    while ((g.re + g.im) % 2 == 0) {
        g = div_one_plus_i(g);
        ++j;
    }
    return j;
}

std::vector<GaussianInt> enumerate_region(RegionSpec spec) {
    if (spec.n < 0) return {};
    // The box side is 2*(w(n)-2)+1; n = 22 is the first index past 10^8 cells.
    if (spec.n > 123 || w(spec.n) - 2 > 4999)
        throw std::length_error("region too large to enumerate");
    const auto bound = static_cast<std::int64_t>(w(spec.n) - 2);

    bool (*member)(GaussianInt, int) = nullptr;
    switch (spec.kind) {
        case RegionKind::S: member = in_S; break;
        case RegionKind::D: member = in_D; break;
        case RegionKind::B: member = in_B; break;
    }

    std::vector<GaussianInt> points;
    for (std::int64_t re = -bound; re <= bound; ++re)
        for (std::int64_t im = -bound; im <= bound; ++im)
            if (member({re, im}, spec.n)) points.push_back({re, im});
    return points;
}

}  // namespace euclidzi
