#include "fusionobs/fusion_ring.hpp"

#include "fusionobs/checked.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <numeric>
#include <sstream>

namespace fusionobs {

namespace {

std::size_t flat(std::size_t rank, std::size_t i, std::size_t j, std::size_t k) {
    return (i * rank + j) * rank + k;
}

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// Checks the associativity equation (i,j,l,k) on a full table.
// Returns {lhs, rhs}: lhs = sum_t m^k_{i,t} m^t_{j,l}, rhs = sum_s m^s_{i,j} m^k_{s,l}.
std::pair<std::int64_t, std::int64_t> associativity_sides(std::span<const std::int64_t> table,
                                                          std::size_t r, std::size_t i,
                                                          std::size_t j, std::size_t l,
                                                          std::size_t k) {
    std::int64_t lhs = 0, rhs = 0;
    for (std::size_t t = 0; t < r; ++t) {
        lhs = checked_add(lhs, checked_mul(table[flat(r, i, t, k)], table[flat(r, j, l, t)]));
        rhs = checked_add(rhs, checked_mul(table[flat(r, i, j, t)], table[flat(r, t, l, k)]));
    }
    return {lhs, rhs};
}

bool is_identity(std::span<const std::int64_t> table, std::size_t r, Element e) {
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t s = 0; s < r; ++s) {
            const std::int64_t want = s == t ? 1 : 0;
            if (table[flat(r, t, e, s)] != want || table[flat(r, e, t, s)] != want) return false;
        }
    return true;
}

} // namespace

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Shape:
            os << "shape: table has " << lhs << " entries, expected " << rhs;
            break;
        case Kind::Name:
            os << "element name " << join(where) << " is empty, duplicated or contains ','";
            break;
        case Kind::NegativeEntry:
            os << "negative entry at (" << join(where) << "): " << lhs;
            break;
        case Kind::Associativity:
            os << "associativity fails at (i,j,l,k)=(" << join(where) << "): " << lhs
               << " != " << rhs;
            break;
        case Kind::Identity:
            os << "identity axiom fails at (t,e,s)=(" << join(where) << "): " << lhs
               << " != " << rhs;
            break;
        case Kind::Intertwining:
            os << "intertwining fails at (s1,s2,t)=(" << join(where) << "): " << lhs
               << " != " << rhs;
            break;
    }
    return os.str();
}

std::string ValidationReport::describe() const {
    if (ok()) return "OK";
    std::ostringstream os;
    for (const auto& v : violations) os << v.describe() << '\n';
    return os.str();
}

InvalidRing::InvalidRing(ValidationReport report)
    : std::invalid_argument("invalid fusion ring:\n" + report.describe()),
      report_(std::move(report)) {}

ValidationReport validate_fusion_ring(const RawRing& raw) {
    ValidationReport report;
    const std::size_t r = raw.rank();
    if (r == 0) {
        report.violations.push_back({Violation::Kind::Shape, {}, 0, 1});
        return report;
    }
    const std::size_t expected = r * r * r;
    if (raw.table.size() != expected) {
        report.violations.push_back({Violation::Kind::Shape, {},
                                     static_cast<std::int64_t>(raw.table.size()),
                                     static_cast<std::int64_t>(expected)});
        return report;
    }
    if (raw.identity && *raw.identity >= r) {
        report.violations.push_back({Violation::Kind::Shape, {*raw.identity},
                                     static_cast<std::int64_t>(*raw.identity),
                                     static_cast<std::int64_t>(r)});
        return report;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < r; ++i) {
        const auto& n = raw.names[i];
        if (n.empty() || n.find(',') != std::string::npos || !seen.insert(n).second)
            report.violations.push_back({Violation::Kind::Name, {i}, 0, 0});
    }
    if (!report.ok()) return report;
    bool negative = false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (const auto v = raw.table[flat(r, i, j, k)]; v < 0) {
                    report.violations.push_back({Violation::Kind::NegativeEntry, {i, j, k}, v, 0});
                    negative = true;
                }
    if (negative) return report;

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t l = 0; l < r; ++l)
                for (std::size_t k = 0; k < r; ++k) {
                    auto [lhs, rhs] = associativity_sides(raw.table, r, i, j, l, k);
                    if (lhs != rhs)
                        report.violations.push_back(
                            {Violation::Kind::Associativity, {i, j, l, k}, lhs, rhs});
                }

    if (raw.identity) {
        const Element e = *raw.identity;
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t s = 0; s < r; ++s) {
                const std::int64_t want = s == t ? 1 : 0;
                if (raw.table[flat(r, t, e, s)] != want)
                    report.violations.push_back(
                        {Violation::Kind::Identity, {t, e, s}, raw.table[flat(r, t, e, s)], want});
                if (t != e && raw.table[flat(r, e, t, s)] != want)
                    report.violations.push_back(
                        {Violation::Kind::Identity, {e, t, s}, raw.table[flat(r, e, t, s)], want});
            }
    }
    return report;
}

FusionRing::FusionRing(RawRing raw) {
    auto report = validate_fusion_ring(raw);
    if (!report.ok()) throw InvalidRing(std::move(report));
    names_ = std::move(raw.names);
    table_ = std::move(raw.table);
    identity_ = raw.identity;
}

FusionRing::FusionRing(Trusted, RawRing raw)
    : names_(std::move(raw.names)), table_(std::move(raw.table)), identity_(raw.identity) {}

FusionRing FusionRing::single(std::int64_t n, std::string name) {
    RawRing raw{{std::move(name)}, {n}, std::nullopt};
    if (n == 1) raw.identity = 0;
    return FusionRing(std::move(raw));
}

FusionRing FusionRing::rank_two(std::int64_t m, std::int64_t n) {
    RawRing raw{{"e", "x"}, std::vector<std::int64_t>(8, 0), Element{0}};
    raw.table[flat(2, 0, 0, 0)] = 1;
    raw.table[flat(2, 0, 1, 1)] = 1;
    raw.table[flat(2, 1, 0, 1)] = 1;
    raw.table[flat(2, 1, 1, 0)] = n;
    raw.table[flat(2, 1, 1, 1)] = m;
    return FusionRing(std::move(raw));
}

FusionRing FusionRing::group_ring(const std::vector<std::vector<std::size_t>>& table,
                                  std::vector<std::string> names) {
    const std::size_t g = table.size();
    if (names.empty()) {
        for (std::size_t i = 0; i < g; ++i) names.push_back("g" + std::to_string(i));
    }
    if (names.size() != g) throw std::invalid_argument("group_ring: name count mismatch");
    RawRing raw{std::move(names), std::vector<std::int64_t>(g * g * g, 0), std::nullopt};
    for (std::size_t a = 0; a < g; ++a) {
        if (table[a].size() != g) throw std::invalid_argument("group_ring: table is not square");
        for (std::size_t b = 0; b < g; ++b) {
            if (table[a][b] >= g) throw std::invalid_argument("group_ring: entry out of range");
            raw.table[flat(g, a, b, table[a][b])] = 1;
        }
    }
    for (std::size_t e = 0; e < g; ++e)
        if (is_identity(raw.table, g, e)) raw.identity = e;
    return FusionRing(std::move(raw));
}

std::optional<Element> FusionRing::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
}

RawRing FusionRing::raw() const { return RawRing{names_, table_, identity_}; }

FusionRing FusionRing::relabeled(std::span<const std::size_t> order) const {
    const std::size_t r = rank();
    if (order.size() != r) throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<bool> seen(r, false);
    for (auto p : order) {
        if (p >= r || seen[p]) throw std::invalid_argument("relabeled: not a permutation");
        seen[p] = true;
    }
    RawRing out{std::vector<std::string>(r), std::vector<std::int64_t>(r * r * r, 0), std::nullopt};
    for (std::size_t i = 0; i < r; ++i) out.names[order[i]] = names_[i];
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                out.table[flat(r, order[i], order[j], order[k])] = table_[flat(r, i, j, k)];
    if (identity_) out.identity = order[*identity_];
    return FusionRing(Trusted{}, std::move(out));
}

std::optional<Element> find_identity(const FusionRing& ring) {
    for (Element e = 0; e < ring.rank(); ++e)
        if (is_identity(ring.flat_table(), ring.rank(), e)) return e;
    return std::nullopt;
}

std::pair<RawRing, std::vector<std::size_t>> normalize_identity(const RawRing& raw) {
    const std::size_t r = raw.rank();
    std::vector<std::size_t> original(r);
    std::iota(original.begin(), original.end(), 0);
    if (!raw.identity || *raw.identity == 0 || *raw.identity >= r) return {raw, original};
    const std::size_t e = *raw.identity;
    std::rotate(original.begin(), original.begin() + e, original.begin() + e + 1);
    // original = [e, 0, 1, ..., e-1, e+1, ...]
    std::vector<std::size_t> position(r);
    for (std::size_t p = 0; p < r; ++p) position[original[p]] = p;
    RawRing out{std::vector<std::string>(r), raw.table, Element{0}};
    for (std::size_t p = 0; p < r; ++p) out.names[p] = raw.names[original[p]];
    if (raw.table.size() == r * r * r) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < r; ++k)
                    out.table[flat(r, position[i], position[j], position[k])] =
                        raw.table[flat(r, i, j, k)];
    }
    return {std::move(out), std::move(original)};
}

EnvelopingElement::EnvelopingElement(const FusionRing& ring, std::vector<std::int64_t> coeffs)
    : ring_(&ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring.rank())
        throw std::invalid_argument("EnvelopingElement: coefficient count differs from rank");
}

EnvelopingElement EnvelopingElement::basis(const FusionRing& ring, Element s) {
    std::vector<std::int64_t> c(ring.rank(), 0);
    c.at(s) = 1;
    return EnvelopingElement(ring, std::move(c));
}

EnvelopingElement EnvelopingElement::zero(const FusionRing& ring) {
    return EnvelopingElement(ring, std::vector<std::int64_t>(ring.rank(), 0));
}

EnvelopingElement EnvelopingElement::operator+(const EnvelopingElement& other) const {
    if (!(*ring_ == *other.ring_)) throw std::invalid_argument("EnvelopingElement: ring mismatch");
    auto c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], other.coeffs_[i]);
    return EnvelopingElement(*ring_, std::move(c));
}

bool EnvelopingElement::operator==(const EnvelopingElement& other) const {
    return coeffs_ == other.coeffs_ && *ring_ == *other.ring_;
}

EnvelopingElement multiply(const EnvelopingElement& a, const EnvelopingElement& b) {
    if (&a.ring() != &b.ring() && !(a.ring() == b.ring()))
        throw std::invalid_argument("multiply: ring mismatch");
    const auto& ring = a.ring();
    const std::size_t r = ring.rank();
    std::vector<std::int64_t> out(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b[j] == 0) continue;
            const auto ab = checked_mul(a[i], b[j]);
            for (std::size_t s = 0; s < r; ++s)
                out[s] = checked_add(out[s], checked_mul(ab, ring.constant(s, i, j)));
        }
    }
    return EnvelopingElement(ring, std::move(out));
}

std::int64_t nary_constant(const FusionRing& ring, Element output, std::span<const Element> inputs) {
    if (inputs.empty()) throw std::invalid_argument("nary_constant: empty input sequence");
    auto product = EnvelopingElement::basis(ring, inputs.front());
    for (std::size_t i = 1; i < inputs.size(); ++i)
        product = multiply(product, EnvelopingElement::basis(ring, inputs[i]));
    return product[output];
}

ValidationReport validate_morphism(const FusionMorphism& f) {
    ValidationReport report;
    const auto& src = *f.source;
    const auto& dst = *f.target;
    const std::size_t rs = src.rank(), rt = dst.rank();
    bool shape_ok = f.matrix.size() == rt;
    for (const auto& row : f.matrix) shape_ok = shape_ok && row.size() == rs;
    if (!shape_ok) {
        report.violations.push_back({Violation::Kind::Shape, {rt, rs},
                                     static_cast<std::int64_t>(f.matrix.size()),
                                     static_cast<std::int64_t>(rt)});
        return report;
    }
    for (std::size_t t = 0; t < rt; ++t)
        for (std::size_t s = 0; s < rs; ++s)
            if (f.matrix[t][s] < 0)
                report.violations.push_back({Violation::Kind::NegativeEntry, {t, s}, f.matrix[t][s], 0});
    if (!report.ok()) return report;

    for (std::size_t s1 = 0; s1 < rs; ++s1)
        for (std::size_t s2 = 0; s2 < rs; ++s2)
            for (std::size_t t = 0; t < rt; ++t) {
                std::int64_t lhs = 0, rhs = 0;
                for (std::size_t s = 0; s < rs; ++s)
                    lhs = checked_add(lhs, checked_mul(src.constant(s, s1, s2), f.matrix[t][s]));
                for (std::size_t t1 = 0; t1 < rt; ++t1)
                    for (std::size_t t2 = 0; t2 < rt; ++t2)
                        rhs = checked_add(rhs, checked_mul(dst.constant(t, t1, t2),
                                                           checked_mul(f.matrix[t1][s1],
                                                                       f.matrix[t2][s2])));
                if (lhs != rhs)
                    report.violations.push_back({Violation::Kind::Intertwining, {s1, s2, t}, lhs, rhs});
            }
    return report;
}

FusionMorphism compose(const FusionMorphism& first, const FusionMorphism& second) {
    if (!(*first.target == *second.source)) throw std::invalid_argument("compose: rings do not chain");
    const std::size_t ra = first.source->rank(), rb = first.target->rank(), rc = second.target->rank();
    FusionMorphism out{first.source, second.target,
                       std::vector<std::vector<std::int64_t>>(rc, std::vector<std::int64_t>(ra, 0))};
    for (std::size_t c = 0; c < rc; ++c)
        for (std::size_t a = 0; a < ra; ++a)
            for (std::size_t b = 0; b < rb; ++b)
                out.matrix[c][a] = checked_add(out.matrix[c][a],
                                               checked_mul(second.matrix.at(c).at(b),
                                                           first.matrix.at(b).at(a)));
    return out;
}

namespace {

std::vector<std::string> default_names(std::size_t rank, bool with_identity) {
    static const char* plain[] = {"x", "y", "z", "w"};
    static const char* unital[] = {"e", "x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) names.emplace_back(with_identity ? unital[i] : plain[i]);
    return names;
}

class RingSearch {
public:
    RingSearch(std::size_t rank, std::int64_t max_entry, bool require_identity,
               std::function<void(RawRing)> emit)
        : r_(rank), max_(max_entry), unital_(require_identity), emit_(std::move(emit)),
          table_(rank * rank * rank, 0) {
        std::vector<bool> forced(table_.size(), false);
        if (unital_) {
            for (std::size_t t = 0; t < r_; ++t)
                for (std::size_t s = 0; s < r_; ++s) {
                    table_[flat(r_, 0, t, s)] = table_[flat(r_, t, 0, s)] = s == t ? 1 : 0;
                    forced[flat(r_, 0, t, s)] = forced[flat(r_, t, 0, s)] = true;
                }
        }
        for (std::size_t p = 0; p < table_.size(); ++p)
            if (!forced[p]) free_.push_back(p);

        assigned_ = forced;
        // Equations are bound-checked whenever one of their entries is assigned.
        touching_.resize(table_.size());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j)
                for (std::size_t l = 0; l < r_; ++l)
                    for (std::size_t k = 0; k < r_; ++k) {
                        Equation eq;
                        for (std::size_t t = 0; t < r_; ++t) {
                            eq.lhs.push_back({flat(r_, i, t, k), flat(r_, j, l, t)});
                            eq.rhs.push_back({flat(r_, i, j, t), flat(r_, t, l, k)});
                        }
                        const std::size_t id = equations_.size();
                        equations_.push_back(std::move(eq));
                        std::set<std::size_t> positions;
                        for (const auto& side : {equations_[id].lhs, equations_[id].rhs})
                            for (const auto& [a, b] : side) positions.insert({a, b});
                        for (auto pos : positions)
                            if (!forced[pos]) touching_[pos].push_back(id);
                    }
    }

    void run() { assign(0); }

private:
    void assign(std::size_t depth) {
        if (depth == free_.size()) {
            RawRing raw{default_names(r_, unital_), table_, std::nullopt};
            if (unital_) raw.identity = 0;
            emit_(std::move(raw));
            return;
        }
        const std::size_t p = free_[depth];
        assigned_[p] = true;
        for (std::int64_t v = 0; v <= max_; ++v) {
            table_[p] = v;
            if (consistent(p)) assign(depth + 1);
        }
        assigned_[p] = false;
        table_[p] = 0;
    }

    using Side = std::vector<std::array<std::size_t, 2>>;
    struct Equation {
        Side lhs, rhs;
    };

    // Range of a side when unassigned entries may take any value in [0, max].
    std::pair<std::int64_t, std::int64_t> bounds(const Side& side) const {
        std::int64_t lo = 0, hi = 0;
        for (const auto& [a, b] : side) {
            const std::int64_t alo = assigned_[a] ? table_[a] : 0, ahi = assigned_[a] ? table_[a] : max_;
            const std::int64_t blo = assigned_[b] ? table_[b] : 0, bhi = assigned_[b] ? table_[b] : max_;
            lo += alo * blo;
            hi += ahi * bhi;
        }
        return {lo, hi};
    }

    bool consistent(std::size_t p) const {
        for (auto id : touching_[p]) {
            const auto [llo, lhi] = bounds(equations_[id].lhs);
            const auto [rlo, rhi] = bounds(equations_[id].rhs);
            if (llo > rhi || rlo > lhi) return false;
        }
        return true;
    }

    std::size_t r_;
    std::int64_t max_;
    bool unital_;
    std::function<void(RawRing)> emit_;
    std::vector<std::int64_t> table_;
    std::vector<std::size_t> free_;
    std::vector<bool> assigned_;
    std::vector<Equation> equations_;
    std::vector<std::vector<std::size_t>> touching_;
};

} // namespace

void enumerate_fusion_rings(std::size_t rank, std::int64_t max_entry, bool require_identity,
                            const std::function<void(const FusionRing&)>& emit) {
    if (rank < 1 || rank > kMaxEnumerationRank)
        throw std::out_of_range("enumerate_fusion_rings: rank must be in 1.." +
                                std::to_string(kMaxEnumerationRank));
    if (max_entry < 0 || max_entry > kMaxEnumerationEntry)
        throw std::out_of_range("enumerate_fusion_rings: max_entry must be in 0.." +
                                std::to_string(kMaxEnumerationEntry));
    RingSearch(rank, max_entry, require_identity, [&](RawRing raw) {
        emit(FusionRing(FusionRing::Trusted{}, std::move(raw)));
    }).run();
}

std::vector<FusionRing> enumerate_fusion_rings(std::size_t rank, std::int64_t max_entry,
                                               bool require_identity) {
    std::vector<FusionRing> out;
    enumerate_fusion_rings(rank, max_entry, require_identity,
                           [&](const FusionRing& r) { out.push_back(r); });
    return out;
}

} // namespace fusionobs
