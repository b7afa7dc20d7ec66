#pragma once

// Independent reference computations used only by tests.

#include "fusionobs/fusion_ring.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

inline int inversion_parity(const std::vector<std::size_t>& image) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j) inv += image[i] > image[j];
    return static_cast<int>(inv % 2);
}

// Position in Y x X (lex) of each element of X x Y (lex).
inline std::vector<std::size_t> lex_swap_permutation(std::size_t nx, std::size_t ny) {
    std::vector<std::size_t> image;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) image.push_back(y * nx + x);
    return image;
}

// Elements (a, b, k) listed by (a, b, k); image is the rank of each under (b, a, k).
inline std::vector<std::size_t> block_reindex_permutation(const std::vector<std::vector<std::int64_t>>& sizes) {
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> elems;
    for (std::size_t a = 0; a < sizes.size(); ++a)
        for (std::size_t b = 0; b < sizes[a].size(); ++b)
            for (std::int64_t k = 0; k < sizes[a][b]; ++k) elems.emplace_back(a, b, k);
    auto target = elems;
    std::sort(target.begin(), target.end(), [](const auto& l, const auto& r) {
        return std::tie(std::get<1>(l), std::get<0>(l), std::get<2>(l)) <
               std::tie(std::get<1>(r), std::get<0>(r), std::get<2>(r));
    });
    std::vector<std::size_t> image;
    for (const auto& e : elems) image.push_back(static_cast<std::size_t>(std::find(target.begin(), target.end(), e) - target.begin()));
    return image;
}

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

inline std::uint64_t catalan(unsigned n) {
    std::uint64_t c = 1;
    for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// Coefficients of the product of basis elements, expanded left to right with a plain table walk.
inline std::vector<std::int64_t> expand_product(const fusionobs::FusionRing& ring, const std::vector<std::size_t>& word) {
    const std::size_t r = ring.rank();
    std::vector<std::int64_t> acc(r, 0);
    acc[word.at(0)] = 1;
    for (std::size_t w = 1; w < word.size(); ++w) {
        std::vector<std::int64_t> next(r, 0);
        for (std::size_t s = 0; s < r; ++s)
            for (std::size_t k = 0; k < r; ++k) next[k] += acc[s] * ring.constant(k, s, word[w]);
        acc = next;
    }
    return acc;
}

// Random associative rank-3 tables: rejection sampling over a structured family plus raw tables.
inline std::vector<fusionobs::FusionRing> random_rank3_rings(std::size_t count, std::int64_t max_entry, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(0, max_entry);
    std::vector<fusionobs::FusionRing> out;
    while (out.size() < count) {
        fusionobs::RawRing raw{{"a", "b", "c"}, std::vector<std::int64_t>(27), std::nullopt};
        const bool unital = rng() % 2 == 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) {
                    std::int64_t v = entry(rng);
                    if (unital && (i == 0 || j == 0)) v = (i == 0 ? j : i) == k ? 1 : 0;
                    else if (rng() % 3 != 0) v = 0;
                    raw.table[(i * 3 + j) * 3 + k] = v;
                }
        if (unital) raw.identity = 0;
        if (fusionobs::validate_fusion_ring(raw).ok()) out.emplace_back(raw);
    }
    return out;
}

} // namespace oracle
