#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fusionobs {

/// Packed vector over the two-element field.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v) words_[i / 64] |= bit;
        else words_[i / 64] &= ~bit;
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVector& operator^=(const BitVector& other);
    BitVector operator^(const BitVector& other) const {
        BitVector r = *this;
        r ^= other;
        return r;
    }
    bool any() const;
    std::size_t count() const;
    /// Index of the lowest set bit at or after `from`, if any.
    std::optional<std::size_t> find_first(std::size_t from = 0) const;

    bool operator==(const BitVector&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over the two-element field stored as packed rows.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

    BitVector apply(const BitVector& x) const;

    std::size_t rank() const;
    /// Some x with A x = b, or nothing if b is outside the column space.
    std::optional<BitVector> solve(const BitVector& b) const;

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

} // namespace fusionobs
