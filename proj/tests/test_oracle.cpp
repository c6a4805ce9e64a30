#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "euclidzi/expansion.hpp"
#include "euclidzi/gaussian.hpp"
#include "euclidzi/mixer.hpp"
#include "euclidzi/oracle.hpp"
#include "euclidzi/phi.hpp"
#include "support.hpp"

using euclidzi::GaussianInt;
using euclidzi::LevelMap;

TEST_CASE("tiny level sets are exact") {
    const LevelMap level0 = euclidzi::bfs_levels(0);
    CHECK(level0.size() == 5);
    const std::vector<GaussianInt> expected0 = {
        {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
    CHECK(level0.points_at_level(0) == expected0);

    const LevelMap level1 = euclidzi::bfs_levels(1);
    CHECK(level1.cumulative_counts() == std::vector<std::size_t>{5, 17});
    CHECK(level1.level_of({2, 1}) == 1);
    CHECK(level1.level_of({1, 1}) == 1);
    CHECK_FALSE(level1.level_of({2, 0}).has_value());
}

TEST_CASE("cumulative counts through level ten") {
    const std::vector<std::size_t> expected = {5,    17,   49,   125,   297,  669,
                                               1457, 3093, 6457, 13309, 27201};
    CHECK(euclidzi::bfs_levels(10).cumulative_counts() == expected);
}

TEST_CASE("levels equal phi on every stored point") {
    const LevelMap levels = euclidzi::bfs_levels(9);
    for (const auto& [g, level] : levels.sorted_entries()) {
        if (g.is_zero()) continue;
        CAPTURE(g.re);
        CAPTURE(g.im);
        CHECK(euclidzi::phi(g) == level);
    }
}

TEST_CASE("certificates evaluate back with the stored length") {
    const LevelMap levels = euclidzi::bfs_levels(8);
    for (const auto& [g, level] : levels.sorted_entries()) {
        const euclidzi::Expansion cert = levels.certificate(g);
        CHECK(euclidzi::eval_expansion(cert) == g);
        CHECK(cert.digits.size() == static_cast<std::size_t>(level) + 1);
        if (!g.is_zero()) CHECK(euclidzi::assert_minimality(g, cert, levels));
    }
    CHECK_THROWS_AS(levels.certificate({1000, 0}), std::out_of_range);
}

TEST_CASE("one-shot oracle lookups") {
    CHECK(euclidzi::phi_oracle({90, 44}, 12) == 11);
    CHECK(euclidzi::phi_oracle({5, 0}, 5) == 3);
    CHECK(euclidzi::phi_oracle({1, 0}, 0) == 0);
    CHECK_FALSE(euclidzi::phi_oracle({1024, 0}, 5).has_value());
}

TEST_CASE("assert_minimality flags longer-than-needed expansions") {
    const GaussianInt five{5, 0};
    CHECK(euclidzi::assert_minimality(five, euclidzi::text_to_digits("mmmm"), 6));
    CHECK_FALSE(
        euclidzi::assert_minimality(five, euclidzi::text_to_digits("n0001"), 6));
    CHECK_THROWS_AS(
        euclidzi::assert_minimality(five, euclidzi::text_to_digits("1"), 6),
        std::invalid_argument);
    CHECK_THROWS_AS(euclidzi::assert_minimality(
                        {1024, 0}, euclidzi::minimal_expansion({1024, 0}), 5),
                    std::out_of_range);
}

TEST_CASE("oracle budget limits") {
    CHECK_THROWS_AS(euclidzi::bfs_levels(17), std::length_error);
    CHECK_THROWS_AS(euclidzi::bfs_levels(-1), std::out_of_range);
}

TEST_CASE("euclidean_witness returns the least acceptable remainder") {
    const auto [q, r] = euclidzi::euclidean_witness({7, 2}, {2, 0});
    CHECK(q == GaussianInt{4, 2});
    CHECK(r == GaussianInt{-1, -2});

    SUBCASE("unit divisors divide exactly") {
        const auto [qu, ru] = euclidzi::euclidean_witness({37, -11}, {0, -1});
        CHECK(ru == GaussianInt{0, 0});
        CHECK(euclidzi::mul_unit(qu, euclidzi::Unit::minus_i) == GaussianInt{37, -11});
    }

    SUBCASE("zero dividend") {
        const auto [qz, rz] = euclidzi::euclidean_witness({0, 0}, {9, 4});
        CHECK(qz == GaussianInt{0, 0});
        CHECK(rz == GaussianInt{0, 0});
    }

    SUBCASE("zero divisor is rejected") {
        CHECK_THROWS_AS(euclidzi::euclidean_witness({1, 0}, {0, 0}),
                        std::domain_error);
    }
}

// The division contract itself: a = q*b + r with r = 0 or phi(r) < phi(b).
TEST_CASE("euclidean_witness satisfies the division contract") {
    euclidzi::SplitMix64 rng(0xd17);
    for (int k = 0; k < 400; ++k) {
        const GaussianInt a = testsupport::random_point(rng, 10);
        const GaussianInt b = testsupport::random_nonzero(rng, 10);
        const auto [q, r] = euclidzi::euclidean_witness(a, b);
        const GaussianInt qb{q.re * b.re - q.im * b.im, q.re * b.im + q.im * b.re};
        CHECK(qb + r == a);
        if (!r.is_zero()) CHECK(euclidzi::phi(r) < euclidzi::phi(b));
    }
}
