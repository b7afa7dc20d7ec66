#include "fusionobs/bit_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace fusionobs {

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::size_t> BitVector::find_first(std::size_t from) const {
    if (from >= size_) return std::nullopt;
    std::size_t w = from / 64;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
        if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        if (++w == words_.size()) return std::nullopt;
        word = words_[w];
    }
}

BitVector BitMatrix::apply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        // Parity of the row/x overlap.
        bool bit = false;
        for (auto c = rows_[r].find_first(); c; c = rows_[r].find_first(*c + 1))
            bit ^= x.get(*c);
        out.set(r, bit);
    }
    return out;
}

namespace {

// Row-reduces `rows` in place (pivot = first nonzero column, scanned left to right)
// applying the same operations to `rhs` when given. Returns pivot columns by row.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t cols, BitVector* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        if (p != next) {
            std::swap(rows[p], rows[next]);
            if (rhs) {
                const bool a = rhs->get(p), b = rhs->get(next);
                rhs->set(p, b);
                rhs->set(next, a);
            }
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
                if (rhs && rhs->get(next)) rhs->flip(r);
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

} // namespace

std::size_t BitMatrix::rank() const {
    auto rows = rows_;
    return eliminate(rows, cols_, nullptr).size();
}

std::optional<BitVector> BitMatrix::solve(const BitVector& b) const {
    if (b.size() != rows()) throw std::invalid_argument("BitMatrix::solve: size mismatch");
    auto rows = rows_;
    BitVector rhs = b;
    const auto pivots = eliminate(rows, cols_, &rhs);
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
        if (rhs.get(r)) return std::nullopt;
    BitVector x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x.set(pivots[r], rhs.get(r));
    return x;
}

} // namespace fusionobs
