#include "fusionobs/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace fusionobs {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (auto v : image_) {
        if (v >= image_.size() || hit[v]) throw std::invalid_argument("Permutation: not a bijection");
        hit[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::after(const Permutation& first) const {
    if (first.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<std::size_t> image(size());
    for (std::size_t i = 0; i < size(); ++i) image[i] = image_[first(i)];
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> image(size());
    for (std::size_t i = 0; i < size(); ++i) image[image_[i]] = i;
    return Permutation(std::move(image));
}

std::size_t Permutation::inversions() const {
    // Fenwick tree over values seen so far.
    const std::size_t n = size();
    std::vector<std::size_t> tree(n + 1, 0);
    std::size_t count = 0;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = image_[i]; k > 0; k -= k & -k) count += tree[k];
        for (std::size_t k = image_[i] + 1; k <= n; k += k & -k) ++tree[k];
    }
    return count;
}

int sort_sign_oracle(const Permutation& p) { return static_cast<int>(p.inversions() % 2); }

} // namespace fusionobs
