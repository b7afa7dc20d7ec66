#include "fusionobs/hochschild.hpp"

#include "fusionobs/checked.hpp"

#include <string>

namespace fusionobs::hochschild {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
    return static_cast<std::size_t>(checked_pow(static_cast<std::int64_t>(base), static_cast<unsigned>(exp)));
}

bool odd(std::int64_t v) { return (v & 1) != 0; }

} // namespace

Cochain::Cochain(const FusionRing& ring, std::size_t degree)
    : ring_(std::make_shared<const FusionRing>(ring)), degree_(degree), tuples_(power(ring.rank(), degree)),
      bits_(tuples_ * ring.rank()) {}

std::size_t Cochain::tuple_index(std::span<const Element> tuple) const {
    if (tuple.size() != degree_) throw std::invalid_argument("Cochain: tuple length differs from degree");
    std::size_t idx = 0;
    for (auto x : tuple) {
        if (x >= ring_->rank()) throw std::out_of_range("Cochain: element out of range");
        idx = idx * ring_->rank() + x;
    }
    return idx;
}

std::vector<Element> Cochain::tuple_at(std::size_t index) const {
    std::vector<Element> t(degree_);
    for (std::size_t i = degree_; i-- > 0;) {
        t[i] = index % ring_->rank();
        index /= ring_->rank();
    }
    return t;
}

bool Cochain::get(std::span<const Element> tuple, Element component) const {
    return bits_.get(tuple_index(tuple) * ring_->rank() + component);
}

void Cochain::set(std::span<const Element> tuple, Element component, bool value) {
    if (component >= ring_->rank()) throw std::out_of_range("Cochain: component out of range");
    bits_.set(tuple_index(tuple) * ring_->rank() + component, value);
}

Cochain Cochain::from_bits(const FusionRing& ring, std::size_t degree, BitVector bits) {
    Cochain c(ring, degree);
    if (bits.size() != c.bits_.size()) throw std::invalid_argument("Cochain: bit count mismatch");
    c.bits_ = std::move(bits);
    return c;
}

Cochain Cochain::operator+(const Cochain& other) const {
    if (!(*ring_ == *other.ring_) || degree_ != other.degree_)
        throw std::invalid_argument("Cochain: ring or degree mismatch");
    Cochain out = *this;
    out.bits_ ^= other.bits_;
    return out;
}

bool Cochain::operator==(const Cochain& other) const {
    return degree_ == other.degree_ && bits_ == other.bits_ && *ring_ == *other.ring_;
}

Cochain Cochain::transported(const FusionRing& relabeled_ring, std::span<const std::size_t> order) const {
    const std::size_t r = ring_->rank();
    if (relabeled_ring.rank() != r || order.size() != r)
        throw std::invalid_argument("Cochain::transported: rank mismatch");
    Cochain out(relabeled_ring, degree_);
    std::vector<Element> moved(degree_);
    for (std::size_t t = 0; t < tuples_; ++t) {
        const auto tuple = tuple_at(t);
        for (std::size_t i = 0; i < degree_; ++i) moved[i] = order[tuple[i]];
        const std::size_t base = out.tuple_index(moved) * r;
        for (Element s = 0; s < r; ++s)
            if (bits_.get(t * r + s)) out.bits_.set(base + order[s], true);
    }
    return out;
}

Cochain coboundary(const Cochain& f) {
    const FusionRing& ring = f.ring();
    const std::size_t r = ring.rank();
    const std::size_t n = f.degree();
    Cochain out(ring, n + 1);
    std::vector<Element> inner(n);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        const auto x = out.tuple_at(t);
        std::vector<bool> value(r, false);
        auto add_left = [&](Element left, std::size_t row) {
            for (Element y = 0; y < r; ++y)
                if (f.bits().get(row * r + y))
                    for (Element s = 0; s < r; ++s)
                        if (odd(ring.constant(s, left, y))) value[s] = !value[s];
        };
        auto add_right = [&](std::size_t row, Element right) {
            for (Element y = 0; y < r; ++y)
                if (f.bits().get(row * r + y))
                    for (Element s = 0; s < r; ++s)
                        if (odd(ring.constant(s, y, right))) value[s] = !value[s];
        };
        std::copy(x.begin() + 1, x.end(), inner.begin());
        add_left(x[0], f.tuple_index(inner));
        for (std::size_t i = 0; i + 1 < n + 1; ++i) {
            for (Element u = 0; u < r; ++u) {
                if (!odd(ring.constant(u, x[i], x[i + 1]))) continue;
                std::size_t k = 0;
                for (std::size_t j = 0; j < n + 1; ++j) {
                    if (j == i) inner[k++] = u;
                    else if (j != i + 1) inner[k++] = x[j];
                }
                const std::size_t row = f.tuple_index(inner);
                for (Element s = 0; s < r; ++s)
                    if (f.bits().get(row * r + s)) value[s] = !value[s];
            }
        }
        std::copy(x.begin(), x.end() - 1, inner.begin());
        add_right(f.tuple_index(inner), x[n]);
        for (Element s = 0; s < r; ++s)
            if (value[s]) out.set(x, s, true);
    }
    return out;
}

BitMatrix coboundary_matrix(const FusionRing& ring, std::size_t degree) {
    const std::size_t r = ring.rank();
    const std::size_t n = degree;
    const Cochain source(ring, n);
    const Cochain target(ring, n + 1);
    BitMatrix d(target.tuples() * r, source.tuples() * r);
    std::vector<Element> inner(n);
    for (std::size_t t = 0; t < target.tuples(); ++t) {
        const auto x = target.tuple_at(t);
        std::copy(x.begin() + 1, x.end(), inner.begin());
        const std::size_t tail = source.tuple_index(inner);
        std::copy(x.begin(), x.end() - 1, inner.begin());
        const std::size_t head = source.tuple_index(inner);
        for (Element s = 0; s < r; ++s) {
            const std::size_t row = t * r + s;
            for (Element y = 0; y < r; ++y) {
                if (odd(ring.constant(s, x[0], y))) d.flip(row, tail * r + y);
                if (odd(ring.constant(s, y, x[n]))) d.flip(row, head * r + y);
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (Element u = 0; u < r; ++u) {
                    if (!odd(ring.constant(u, x[i], x[i + 1]))) continue;
                    std::size_t k = 0;
                    for (std::size_t j = 0; j < n + 1; ++j) {
                        if (j == i) inner[k++] = u;
                        else if (j != i + 1) inner[k++] = x[j];
                    }
                    d.flip(row, source.tuple_index(inner) * r + s);
                }
            }
        }
    }
    return d;
}

std::size_t cohomology_dim(const FusionRing& ring, std::size_t degree) {
    if (ring.rank() > kMaxCohomologyRank || degree > kMaxCohomologyDegree)
        throw SolverBoundsExceeded("cohomology_dim: supported for rank <= 3 and degree <= 5 (got rank " +
                                   std::to_string(ring.rank()) + ", degree " + std::to_string(degree) + ")");
    const std::size_t cochains = power(ring.rank(), degree) * ring.rank();
    const std::size_t kernel = cochains - coboundary_matrix(ring, degree).rank();
    const std::size_t image = degree == 0 ? 0 : coboundary_matrix(ring, degree - 1).rank();
    return kernel - image;
}

CoboundaryDecision is_coboundary(const Cochain& c) {
    if (c.degree() == 0) throw std::invalid_argument("is_coboundary: degree must be at least 1");
    if (c.degree() > kMaxCohomologyDegree)
        throw SolverBoundsExceeded("is_coboundary: degree must be at most 5");
    if (!coboundary(c).is_zero()) throw NotACocycle("is_coboundary: input is not a cocycle");
    if (c.is_zero()) return {true, Cochain(c.ring(), c.degree() - 1)};
    const std::size_t rows = c.tuples() * c.ring().rank();
    if (rows > kMaxSolverRows)
        throw SolverBoundsExceeded("is_coboundary: system with " + std::to_string(rows) +
                                   " equations exceeds the solver bound of " + std::to_string(kMaxSolverRows));
    const auto d = coboundary_matrix(c.ring(), c.degree() - 1);
    auto solution = d.solve(c.bits());
    if (!solution) return {false, std::nullopt};
    return {true, Cochain::from_bits(c.ring(), c.degree() - 1, std::move(*solution))};
}

namespace {

// 2x2 matrices over GF(2) acting on coordinates (e, x).
using Mat2 = std::array<std::array<int, 2>, 2>;

std::vector<std::array<int, 2>> span_basis(const std::vector<std::array<int, 2>>& vectors) {
    std::vector<std::array<int, 2>> basis;
    auto in_span = [&](std::array<int, 2> v) {
        // Basis has at most two vectors; test all combinations.
        const std::size_t k = basis.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::array<int, 2> s{0, 0};
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) s = {s[0] ^ basis[i][0], s[1] ^ basis[i][1]};
            if (s == v) return true;
        }
        return false;
    };
    for (auto v : vectors)
        if (!in_span(v)) basis.push_back(v);
    return basis;
}

std::array<int, 2> apply(const Mat2& a, std::array<int, 2> v) {
    return {(a[0][0] * v[0] + a[0][1] * v[1]) & 1, (a[1][0] * v[0] + a[1][1] * v[1]) & 1};
}

} // namespace

Rank2Cohomology rank2_cohomology(std::int64_t m, std::int64_t n, std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("rank2_cohomology: degree must be at least 1");
    // Multiplication by x on M = A(S)/2 in the basis (e, x): e -> x, x -> n e + m x.
    const int mm = odd(m), nn = odd(n);
    const Mat2 left{{{0, nn}, {1, mm}}};
    const Mat2 right = left;  // A(S) is commutative
    Mat2 commutator{}, anticommutator{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            commutator[i][j] = (left[i][j] + right[i][j]) & 1;  // xz - zx
            anticommutator[i][j] = (left[i][j] + right[i][j] + (i == j ? mm : 0)) & 1;  // xz + zx - mz
        }
    // Even degrees: ker(commutator) / im(anticommutator); odd: the other way round.
    const bool even = degree % 2 == 0;
    const Mat2& kernel_map = even ? commutator : anticommutator;
    const Mat2& image_map = even ? anticommutator : commutator;

    const std::vector<std::array<int, 2>> all{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<std::array<int, 2>> kernel, image;
    for (auto v : all) {
        if (apply(kernel_map, v) == std::array<int, 2>{0, 0}) kernel.push_back(v);
        image.push_back(apply(image_map, v));
    }
    const auto image_basis = span_basis(image);
    auto combined = image_basis;
    for (auto v : span_basis(kernel)) combined.push_back(v);
    const auto full = span_basis(combined);

    Rank2Cohomology out;
    out.dimension = full.size() - image_basis.size();
    out.representatives.assign(full.begin() + static_cast<std::ptrdiff_t>(image_basis.size()), full.end());
    return out;
}

ClassVerdict classify_rank2(std::int64_t m, std::int64_t n) {
    const auto m2 = ((m % 2) + 2) % 2, m4 = ((m % 4) + 4) % 4, n4 = ((n % 4) + 4) % 4;
    const bool nontrivial = (m2 == 0 && (n4 == 2 || n4 == 3)) || (m4 == 2 && n4 == 1);
    return nontrivial ? ClassVerdict::Nontrivial : ClassVerdict::Trivial;
}

ClassVerdict classify_rank2_by_evaluation(std::int64_t m, std::int64_t n) {
    if (odd(m)) return ClassVerdict::Trivial;
    const bool alpha_e = odd(choose2(n) + n * choose2(m));
    const bool alpha_x = odd(m * choose2(m) + n * m);
    return alpha_e || alpha_x ? ClassVerdict::Nontrivial : ClassVerdict::Trivial;
}

const char* to_string(ClassVerdict v) { return v == ClassVerdict::Trivial ? "trivial" : "nontrivial"; }

} // namespace fusionobs::hochschild
