#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionobs/bit_matrix.hpp"
#include "fusionobs/permutation.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace fusionobs;

TEST_CASE("sign oracle") {
    CHECK(sort_sign_oracle(Permutation::identity(0)) == 0);
    CHECK(sort_sign_oracle(Permutation::identity(7)) == 0);
    CHECK(sort_sign_oracle(Permutation({1, 0, 2})) == 1);
    CHECK(sort_sign_oracle(Permutation({0, 2, 1, 3})) == 1);
    CHECK(sort_sign_oracle(Permutation({1, 2, 0})) == 0);
}

TEST_CASE("inversions match quadratic count on random permutations") {
    std::mt19937 rng(7);
    for (std::size_t n = 0; n < 40; ++n) {
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), 0);
        std::shuffle(image.begin(), image.end(), rng);
        std::size_t inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inv += image[i] > image[j];
        const Permutation p(image);
        CHECK(p.inversions() == inv);
        CHECK(sort_sign_oracle(p) == oracle::inversion_parity(image));
        CHECK(sort_sign_oracle(p.inverse()) == sort_sign_oracle(p));
        CHECK(p.after(p.inverse()) == Permutation::identity(n));
    }
}

TEST_CASE("composition order and parity additivity") {
    const Permutation a({1, 2, 0}), b({1, 0, 2});
    CHECK(a.after(b).image() == std::vector<std::size_t>{2, 1, 0});
    CHECK(sort_sign_oracle(a.after(b)) == (sort_sign_oracle(a) ^ sort_sign_oracle(b)));
}

TEST_CASE("invalid permutations are rejected") {
    CHECK_THROWS(Permutation({0, 0}));
    CHECK_THROWS(Permutation({0, 2}));
    CHECK_THROWS(Permutation({1, 0}).after(Permutation::identity(3)));
}

TEST_CASE("bit vectors") {
    BitVector v(130);
    CHECK_FALSE(v.any());
    v.set(0, true);
    v.set(129, true);
    v.flip(64);
    CHECK(v.count() == 3);
    CHECK(v.find_first(1) == 64);
    CHECK(v.find_first(65) == 129);
    BitVector w(130);
    w.set(64, true);
    CHECK((v ^ w).count() == 2);
}

TEST_CASE("bit matrix rank and solve against brute force") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 2);
        // image by enumeration of all inputs
        std::vector<std::uint32_t> image;
        for (std::uint32_t x = 0; x < (1u << cols); ++x) {
            BitVector xv(cols);
            for (std::size_t c = 0; c < cols; ++c) xv.set(c, (x >> c) & 1);
            const auto y = m.apply(xv);
            std::uint32_t code = 0;
            for (std::size_t r = 0; r < rows; ++r) code |= static_cast<std::uint32_t>(y.get(r)) << r;
            image.push_back(code);
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        std::size_t rank = 0;
        while ((1u << rank) < image.size()) ++rank;
        CHECK(m.rank() == rank);
        for (std::uint32_t b = 0; b < (1u << rows); ++b) {
            BitVector bv(rows);
            for (std::size_t r = 0; r < rows; ++r) bv.set(r, (b >> r) & 1);
            const auto sol = m.solve(bv);
            const bool reachable = std::binary_search(image.begin(), image.end(), b);
            CHECK(sol.has_value() == reachable);
            if (sol) CHECK(m.apply(*sol) == bv);
        }
    }
}
