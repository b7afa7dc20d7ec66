#pragma once

#include "fusionobs/bit_matrix.hpp"
#include "fusionobs/fusion_ring.hpp"

#include <array>
#include <memory>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fusionobs::hochschild {

/// Hochschild n-cochain of A(S) with coefficients in M = A(S)/2: a map from
/// n-tuples of basis elements to bit-vectors over S. Keeps a shared copy of its ring.
class Cochain {
public:
    Cochain(const FusionRing& ring, std::size_t degree);

    const FusionRing& ring() const { return *ring_; }
    std::size_t degree() const { return degree_; }
    std::size_t tuples() const { return tuples_; }

    /// Flat index of a tuple; the first element is the most significant digit.
    std::size_t tuple_index(std::span<const Element> tuple) const;
    std::vector<Element> tuple_at(std::size_t index) const;

    bool get(std::span<const Element> tuple, Element component) const;
    void set(std::span<const Element> tuple, Element component, bool value);

    /// Packed coordinates: bit (tuple_index * rank + component).
    const BitVector& bits() const { return bits_; }
    static Cochain from_bits(const FusionRing& ring, std::size_t degree, BitVector bits);

    bool is_zero() const { return !bits_.any(); }
    Cochain operator+(const Cochain& other) const;
    bool operator==(const Cochain& other) const;

    /// The same cochain on ring.relabeled(order): element i becomes order[i].
    Cochain transported(const FusionRing& relabeled_ring, std::span<const std::size_t> order) const;

private:
    std::shared_ptr<const FusionRing> ring_;
    std::size_t degree_;
    std::size_t tuples_;
    BitVector bits_;
};

class NotACocycle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SolverBoundsExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Largest coboundary matrix (in rows) the generic solver builds.
inline constexpr std::size_t kMaxSolverRows = 2187;
inline constexpr std::size_t kMaxCohomologyRank = 3;
inline constexpr std::size_t kMaxCohomologyDegree = 5;

/// (df)(x1..x_{n+1}) = x1.f(x2..) + sum_i f(.., x_i x_{i+1}, ..) + f(x1..x_n).x_{n+1}, mod 2.
Cochain coboundary(const Cochain& f);

/// Matrix of d: C^n -> C^{n+1} in the packed coordinates.
BitMatrix coboundary_matrix(const FusionRing& ring, std::size_t degree);

/// dim ker d_n - dim im d_{n-1} over GF(2). Requires rank <= 3 and degree <= 5.
std::size_t cohomology_dim(const FusionRing& ring, std::size_t degree);

struct CoboundaryDecision {
    bool trivial = false;
    std::optional<Cochain> witness;  // dg = c when trivial
};

/// Decides whether the cocycle c (degree >= 1) lies in the image of d.
/// Throws NotACocycle if dc != 0 and SolverBoundsExceeded for oversized systems.
CoboundaryDecision is_coboundary(const Cochain& c);

/// H^degree(A(S), A(S)/2) for S = {e, x}, x*x = m x + n, computed from the
/// 2-periodic bimodule resolution. Representatives are coefficient pairs (e, x) mod 2.
struct Rank2Cohomology {
    std::size_t dimension = 0;
    std::vector<std::array<int, 2>> representatives;
};

Rank2Cohomology rank2_cohomology(std::int64_t m, std::int64_t n, std::size_t degree);

enum class ClassVerdict { Trivial, Nontrivial };

/// Congruence classification of the first obstruction for {e, x}, x*x = m x + n:
/// nontrivial iff (m = 0 mod 2 and n = 2,3 mod 4) or (m = 2 mod 4 and n = 1 mod 4).
ClassVerdict classify_rank2(std::int64_t m, std::int64_t n);

/// Classification read off the value alpha(x,x,x,x) in A(S)/(2,m): nontrivial iff
/// m is even and alpha^e = C(n,2) + n C(m,2) or alpha^x = m C(m,2) + n m is odd.
ClassVerdict classify_rank2_by_evaluation(std::int64_t m, std::int64_t n);

const char* to_string(ClassVerdict v);

} // namespace fusionobs::hochschild
