#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionobs {

// Elements of a fusion ring are indexed 0..rank-1; the index order is the
// linear order used by every ordered construction in this library.
using Element = std::size_t;

/// Unvalidated ring description as read from a file or built by hand.
/// table[(i*rank + j)*rank + k] is the multiplicity of k in i*j.
struct RawRing {
    std::vector<std::string> names;
    std::vector<std::int64_t> table;
    std::optional<Element> identity;

    std::size_t rank() const { return names.size(); }
};

struct Violation {
    enum class Kind { Shape, Name, NegativeEntry, Associativity, Identity, Intertwining };
    Kind kind;
    std::vector<std::size_t> where;  // offending indices, meaning depends on kind
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

class InvalidRing : public std::invalid_argument {
public:
    explicit InvalidRing(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

ValidationReport validate_fusion_ring(const RawRing& raw);

/// A finite fusion ring: non-negative structure constants satisfying associativity.
/// Immutable once constructed.
class FusionRing {
public:
    /// Validates and throws InvalidRing on any violation.
    explicit FusionRing(RawRing raw);

    /// Rank-1 ring x*x = n x.
    static FusionRing single(std::int64_t n, std::string name = "x");
    /// Two-element ring {e, x} with identity e and x*x = m x + n e.
    static FusionRing rank_two(std::int64_t m, std::int64_t n);
    /// Group ring of a finite group given by its multiplication table (entries are indices).
    static FusionRing group_ring(const std::vector<std::vector<std::size_t>>& table,
                                 std::vector<std::string> names = {});

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Element x) const { return names_.at(x); }
    std::optional<Element> identity() const { return identity_; }
    std::optional<Element> find(const std::string& name) const;

    /// Multiplicity of `out` in left*right.
    std::int64_t constant(Element out, Element left, Element right) const {
        return table_[(left * rank() + right) * rank() + out];
    }
    std::span<const std::int64_t> flat_table() const { return table_; }

    RawRing raw() const;

    /// The same ring with element i renamed to position order[i].
    FusionRing relabeled(std::span<const std::size_t> order) const;

    bool operator==(const FusionRing&) const = default;

private:
    struct Trusted {};
    FusionRing(Trusted, RawRing raw);
    friend void enumerate_fusion_rings(std::size_t, std::int64_t, bool,
                                       const std::function<void(const FusionRing&)>&);

    std::vector<std::string> names_;
    std::vector<std::int64_t> table_;
    std::optional<Element> identity_;
};

/// Unique two-sided identity if one exists.
std::optional<Element> find_identity(const FusionRing& ring);

/// Moves a declared identity to index 0. Returns the reordered ring description and,
/// for each new index, the original index.
std::pair<RawRing, std::vector<std::size_t>> normalize_identity(const RawRing& raw);

/// Element of the enveloping ring A(S): an integer combination of basis symbols [s].
/// Holds a non-owning pointer; the ring must outlive the element.
class EnvelopingElement {
public:
    EnvelopingElement(const FusionRing& ring, std::vector<std::int64_t> coeffs);
    static EnvelopingElement basis(const FusionRing& ring, Element s);
    static EnvelopingElement zero(const FusionRing& ring);

    const FusionRing& ring() const { return *ring_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t operator[](Element s) const { return coeffs_.at(s); }

    EnvelopingElement operator+(const EnvelopingElement& other) const;
    bool operator==(const EnvelopingElement& other) const;

private:
    const FusionRing* ring_;
    std::vector<std::int64_t> coeffs_;
};

EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b);

/// Coefficient of `output` in the product of `inputs` (left-nested; any bracketing agrees).
std::int64_t nary_constant(const FusionRing& ring, Element output, std::span<const Element> inputs);

/// A morphism S -> S' of fusion rings: matrix[t][s] = n^t_s.
struct FusionMorphism {
    const FusionRing* source;
    const FusionRing* target;
    std::vector<std::vector<std::int64_t>> matrix;
};

ValidationReport validate_morphism(const FusionMorphism& morphism);

/// Matrix of `second` after `first` (first: A -> B, second: B -> C).
FusionMorphism compose(const FusionMorphism& first, const FusionMorphism& second);

inline constexpr std::size_t kMaxEnumerationRank = 4;
inline constexpr std::int64_t kMaxEnumerationEntry = 4;

/// Emits every ring of the given rank with all entries in [0, max_entry], in
/// lexicographic order of the flattened table. With require_identity, element 0 is
/// the identity and its forced entries are not searched. No isomorphism reduction.
void enumerate_fusion_rings(std::size_t rank, std::int64_t max_entry, bool require_identity,
                            const std::function<void(const FusionRing&)>& emit);

std::vector<FusionRing> enumerate_fusion_rings(std::size_t rank, std::int64_t max_entry,
                                               bool require_identity);

} // namespace fusionobs
