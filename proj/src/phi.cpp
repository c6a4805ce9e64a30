#include "euclidzi/phi.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "euclidzi/growth.hpp"

namespace euclidzi {

namespace {

struct Reduced {
    int j;                // common power of two divided out
    std::uint64_t big;    // max(|re|, |im|) >> j
    std::uint64_t small;  // min(|re|, |im|) >> j
};

Reduced reduce(GaussianInt g) {
    const std::uint64_t x = abs_coord(g.re);
    const std::uint64_t y = abs_coord(g.im);
    if ((x | y) == 0) throw std::domain_error("phi undefined at 0");
    const int j = std::countr_zero(x | y);
    return {j, std::max(x, y) >> j, std::min(x, y) >> j};
}

// With in-range coordinates, big < 2^62, so m stays <= 122 and w(m+1) is
// always representable; the sums below cannot wrap either.
bool low_branch(const Reduced& r, int m) {
    return r.big + r.small <= w(m + 1) - 3;
}

}  // namespace

int phi(GaussianInt g) {
    const Reduced r = reduce(g);
    const int m = min_snowflake_index(r.big);
    return m + 2 * r.j + (low_branch(r, m) ? 0 : 1);
}

PhiBreakdown phi_breakdown(GaussianInt g) {
    const Reduced r = reduce(g);
    const int m = min_snowflake_index(r.big);
    const bool low = low_branch(r, m);
    PhiBreakdown out;
    out.j = r.j;
    out.m = m;
    out.p = std::bit_width(r.big + 2) - 1;
    out.branch = low ? PhiBranch::low : PhiBranch::high;
    out.phi = m + 2 * r.j + (low ? 0 : 1);
    return out;
}

/*
 * Bit-level route to the same value. The snowflake index m of A = big depends
 * only on where t = A + 2 sits between powers of two, because the thresholds
 * are w(2k) - 2 = 3*2^k - 2 and w(2k+1) - 2 = 2^(k+2) - 2. With
 * p = bit_width(t) - 1:
 *
 *   t = 2^p               ->  m = 2p - 3   (A lands exactly on a 2^(k+2)-2)
 *   2^p < t <= 3*2^(p-1)  ->  m = 2p - 2
 *   3*2^(p-1) < t         ->  m = 2p - 1
 *
 * A = 1 gives t = 3, p = 1, middle case, m = 0; no special-casing needed.
 */
int phi_fast(GaussianInt g) {
    const Reduced r = reduce(g);
    const std::uint64_t t = r.big + 2;
    const int p = std::bit_width(t) - 1;
    int m;
    if ((t & (t - 1)) == 0)
        m = 2 * p - 3;
    else if (t <= std::uint64_t{3} << (p - 1))
        m = 2 * p - 2;
    else
        m = 2 * p - 1;
    const std::uint64_t next_w =
        m % 2 == 0 ? std::uint64_t{1} << (m / 2 + 2) : std::uint64_t{3} << ((m + 1) / 2);
    return m + 2 * r.j + (r.big + r.small + 3 <= next_w ? 0 : 1);
}

}  // namespace euclidzi
