#pragma once

#include <cstddef>
#include <vector>

namespace fusionobs {

/// Bijection of {0, ..., n-1}; image[i] is where i goes.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }

    /// (this after first)(i) = this(first(i)).
    Permutation after(const Permutation& first) const;
    Permutation inverse() const;

    /// Number of pairs i < j with image[i] > image[j].
    std::size_t inversions() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> image_;
};

/// Parity of the permutation (0 even, 1 odd) from its inversion count.
int sort_sign_oracle(const Permutation& p);

} // namespace fusionobs
