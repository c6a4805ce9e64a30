#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "euclidzi/expansion.hpp"
#include "euclidzi/gaussian.hpp"

namespace euclidzi {

/**
 * Ground-truth level sets, built independently of the phi formula: level n
 * holds every point reachable as p + v*(1+i)^n with p placed at some earlier
 * level and v a unit digit. Each entry keeps the digit and parent that first
 * reached it, so a witness expansion can be reconstructed for any point.
 *
 * The mapping is a pure function of n_max; every accessor returns sorted
 * data, so iteration order of the underlying table never leaks out.
 */
class LevelMap {
  public:
    int max_level() const noexcept { return _max_level; }
    std::size_t size() const noexcept { return _entries.size(); }

    /** Least n with g expressible in positions 0..n, if within range. */
    std::optional<int> level_of(GaussianInt g) const;

    /** Points first reached at level n, sorted. */
    std::vector<GaussianInt> points_at_level(int n) const;

    /** Cumulative point counts per level (index n holds |level <= n|). */
    std::vector<std::size_t> cumulative_counts() const;

    /** All (point, level) pairs, sorted by point. */
    std::vector<std::pair<GaussianInt, int>> sorted_entries() const;

    /**
     * Digit sequence witnessing the stored level of g, reconstructed from
     * the parent chain: evaluates to g, length = level + 1, nonzero leading
     * digit. std::out_of_range if g is not stored.
     */
    Expansion certificate(GaussianInt g) const;

  private:
    friend LevelMap bfs_levels(int n_max);

    struct Entry {
        int level = 0;
        Digit via = Digit::zero;
        GaussianInt parent;
    };

    struct Hash {
        std::size_t operator()(GaussianInt g) const noexcept {
            auto h = static_cast<std::uint64_t>(g.re) * 0x9e3779b97f4a7c15ULL;
            h ^= static_cast<std::uint64_t>(g.im) + 0x9e3779b97f4a7c15ULL +
                 (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    std::unordered_map<GaussianInt, Entry, Hash> _entries;
    int _max_level = 0;
};

/** Build the level sets up to n_max; std::length_error for n_max > 16. */
LevelMap bfs_levels(int n_max);

/**
 * One-shot oracle lookup: least level of g up to n_max, or empty when g
 * needs more positions. Builds a fresh LevelMap per call; loops should
 * build one themselves and use level_of.
 */
std::optional<int> phi_oracle(GaussianInt g, int n_max);

/**
 * Quotient and remainder witnessing the Euclidean property at (a, b):
 * a = q*b + r with r = 0 or phi(r) < phi(b). Among all acceptable
 * remainders, returns the lexicographically least (which pins q too).
 * std::domain_error when b = 0.
 */
std::pair<GaussianInt, GaussianInt> euclidean_witness(GaussianInt a, GaussianInt b);

/**
 * True iff e (which must evaluate to g, else std::invalid_argument) has the
 * shortest possible length for g, judged by the oracle. The n_max overload
 * builds a throwaway map. std::out_of_range when g lies beyond it.
 */
bool assert_minimality(GaussianInt g, const Expansion& e, const LevelMap& oracle);
bool assert_minimality(GaussianInt g, const Expansion& e, int n_max);

}  // namespace euclidzi
