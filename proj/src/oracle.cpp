#include "euclidzi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "euclidzi/growth.hpp"
#include "euclidzi/phi.hpp"
#include "euclidzi/regions.hpp"

namespace euclidzi {

std::optional<int> LevelMap::level_of(GaussianInt g) const {
    const auto it = _entries.find(g);
    if (it == _entries.end()) return std::nullopt;
    return it->second.level;
}

std::vector<GaussianInt> LevelMap::points_at_level(int n) const {
    std::vector<GaussianInt> out;
    for (const auto& [point, entry] : _entries)
        if (entry.level == n) out.push_back(point);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> LevelMap::cumulative_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(_max_level) + 1, 0);
    for (const auto& [point, entry] : _entries)
        ++counts[static_cast<std::size_t>(entry.level)];
    for (std::size_t n = 1; n < counts.size(); ++n) counts[n] += counts[n - 1];
    return counts;
}

std::vector<std::pair<GaussianInt, int>> LevelMap::sorted_entries() const {
    std::vector<std::pair<GaussianInt, int>> out;
    out.reserve(_entries.size());
    for (const auto& [point, entry] : _entries) out.emplace_back(point, entry.level);
    std::sort(out.begin(), out.end());
    return out;
}

Expansion LevelMap::certificate(GaussianInt g) const {
    const auto top = _entries.find(g);
    if (top == _entries.end())
        throw std::out_of_range("point beyond oracle range");

    std::vector<Digit> digits(static_cast<std::size_t>(top->second.level) + 1, Digit::zero);
    GaussianInt cur = g;
    while (!cur.is_zero()) {
        const Entry& e = _entries.at(cur);
        digits[static_cast<std::size_t>(e.level)] = e.via;
        cur = e.parent;  // parent sits at a strictly earlier level
    }
    std::reverse(digits.begin(), digits.end());
    return {std::move(digits)};
}

LevelMap bfs_levels(int n_max) {
    if (n_max < 0) throw std::out_of_range("level bound must be nonnegative");
    if (n_max > 16) throw std::length_error("oracle budget is n_max <= 16");

    struct UnitDigit {
        Digit digit;
        Unit unit;
    };
    static constexpr UnitDigit kUnitDigits[] = {{Digit::plus_one, Unit::one},
                                                {Digit::minus_one, Unit::minus_one},
                                                {Digit::plus_i, Unit::i},
                                                {Digit::minus_i, Unit::minus_i}};
    LevelMap map;
    map._max_level = n_max;
    map._entries.emplace(GaussianInt{0, 0}, LevelMap::Entry{0, Digit::zero, {0, 0}});
    for (const auto& [digit, unit] : kUnitDigits)
        map._entries.emplace(unit_value(unit), LevelMap::Entry{0, digit, {0, 0}});

    GaussianInt power{1, 1};  // (1+i)^n for the level being expanded
    for (int n = 1; n <= n_max; ++n) {
        // Snapshot of everything reachable with positions below n, sorted so
        // that first-reached parents do not depend on table iteration order.
        std::vector<GaussianInt> frontier;
        frontier.reserve(map._entries.size());
        for (const auto& [point, entry] : map._entries) frontier.push_back(point);
        std::sort(frontier.begin(), frontier.end());

        for (const GaussianInt p : frontier) {
            for (const auto& [digit, unit] : kUnitDigits) {
                const GaussianInt cand = p + mul_unit(power, unit);
                map._entries.try_emplace(cand, LevelMap::Entry{n, digit, p});
            }
        }
        if (n < n_max) power = mul_one_plus_i(power);
    }
    return map;
}

std::optional<int> phi_oracle(GaussianInt g, int n_max) {
    return bfs_levels(n_max).level_of(g);
}

namespace {

using Wide = __int128;

// Round to nearest (half away from zero); den must be positive.
std::int64_t round_div(Wide num, Wide den) {
    const Wide q = num >= 0 ? (num + den / 2) / den : -((-num + den / 2) / den);
    return static_cast<std::int64_t>(q);
}

constexpr bool fits_coord(Wide v) {
    return v > -static_cast<Wide>(kCoordLimit) && v < static_cast<Wide>(kCoordLimit);
}

}  // namespace

/*
 * Rather than scanning the whole candidate box for remainders, walk the small
 * disk of quotients around the exact ratio a/b. Every acceptable remainder r
 * satisfies |r|_inf <= R = w(phi(b)-1) - 2, hence |a/b - q| <= sqrt(2) R/|b|,
 * so all candidate quotients live within that radius (plus one for rounding)
 * of the componentwise-rounded ratio. Distinct quotients give distinct
 * remainders, so minimizing r lexicographically over the disk is the same
 * as scanning remainders in lexicographic order and keeping the first fit.
 */
std::pair<GaussianInt, GaussianInt> euclidean_witness(GaussianInt a, GaussianInt b) {
    if (b.is_zero()) throw std::domain_error("division by zero");

    const int n = phi(b);
    if (n == 0) {
        // b is a unit; a/b is exact and the remainder vanishes.
        for (const Unit u : {Unit::one, Unit::minus_one, Unit::i, Unit::minus_i})
            if (unit_value(u) == b) return {mul_unit(a, unit_inverse(u)), {0, 0}};
        throw std::logic_error("phi(b) = 0 for a non-unit");
    }

    const Wide bre = b.re, bim = b.im;
    const Wide norm = bre * bre + bim * bim;
    const Wide num_re = Wide{a.re} * bre + Wide{a.im} * bim;
    const Wide num_im = Wide{a.im} * bre - Wide{a.re} * bim;
    const std::int64_t q_re0 = round_div(num_re, norm);
    const std::int64_t q_im0 = round_div(num_im, norm);

    const auto R = static_cast<double>(w(n - 1) - 2);
    const auto radius = static_cast<std::int64_t>(
                            std::sqrt(2.0 * R * R / static_cast<double>(norm))) +
                        2;

    const auto r_bound = static_cast<Wide>(w(n - 1) - 2);
    bool found = false;
    GaussianInt best_q, best_r;
    for (std::int64_t dre = -radius; dre <= radius; ++dre) {
        for (std::int64_t dim = -radius; dim <= radius; ++dim) {
            const Wide qre = Wide{q_re0} + dre;
            const Wide qim = Wide{q_im0} + dim;
            const Wide rre = Wide{a.re} - (qre * bre - qim * bim);
            const Wide rim = Wide{a.im} - (qre * bim + qim * bre);
            if (rre > r_bound || rre < -r_bound || rim > r_bound || rim < -r_bound)
                continue;
            if (!fits_coord(qre) || !fits_coord(qim)) continue;
            const GaussianInt r{static_cast<std::int64_t>(rre),
                                static_cast<std::int64_t>(rim)};
            if (!r.is_zero() && !in_B(r, n - 1)) continue;
            if (!found || r < best_r) {
                found = true;
                best_q = {static_cast<std::int64_t>(qre), static_cast<std::int64_t>(qim)};
                best_r = r;
            }
        }
    }
    if (!found)
        throw std::logic_error("euclidean division search exhausted");
    return {best_q, best_r};
}

bool assert_minimality(GaussianInt g, const Expansion& e, const LevelMap& oracle) {
    if (eval_expansion(e) != g)
        throw std::invalid_argument("expansion does not evaluate to the point");
    const auto level = oracle.level_of(g);
    if (!level) throw std::out_of_range("point beyond oracle range");
    return e.digits.size() == static_cast<std::size_t>(*level) + 1;
}

bool assert_minimality(GaussianInt g, const Expansion& e, int n_max) {
    return assert_minimality(g, e, bfs_levels(n_max));
}

}  // namespace euclidzi
