#include "fusionobs/obstruction.hpp"

#include "fusionobs/checked.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

namespace fusionobs::obstruction {

using trees::MarkedIndex;
using trees::MarkedIndexSet;
using trees::PlanarTree;
using trees::VertexPath;

int lex_swap_sign(std::int64_t size_x, std::int64_t size_y) {
    if (size_x < 0 || size_y < 0) throw std::invalid_argument("lex_swap_sign: negative size");
    return static_cast<int>((choose2(size_x) & 1) & (choose2(size_y) & 1));
}

int block_reindex_sign(const std::vector<std::vector<std::int64_t>>& sizes) {
    std::int64_t total = 0;
    for (std::size_t a1 = 0; a1 < sizes.size(); ++a1)
        for (std::size_t a2 = 0; a2 < a1; ++a2)
            for (std::size_t b1 = 0; b1 < sizes[a1].size(); ++b1)
                for (std::size_t b2 = b1 + 1; b2 < sizes[a2].size(); ++b2)
                    total = checked_add(total, checked_mul(sizes[a1][b1], sizes[a2][b2]));
    return static_cast<int>(total & 1);
}

AssociatorIndex associate(const FusionRing& ring, Element x, Element y, Element z, Element w,
                          AssociatorIndex source) {
    const std::size_t r = ring.rank();
    // Rank of the source triple in (u, i, j) order.
    std::int64_t position = 0;
    for (Element u = 0; u < source.label; ++u)
        position = checked_add(position, checked_mul(ring.constant(x, y, u), ring.constant(u, z, w)));
    const std::int64_t inner = ring.constant(source.label, z, w);
    if (source.first < 0 || source.first >= ring.constant(x, y, source.label) || source.second < 0 ||
        source.second >= inner)
        throw std::out_of_range("associate: source index outside its range");
    position = checked_add(position, checked_add(checked_mul(source.first, inner), source.second));

    for (Element v = 0; v < r; ++v) {
        const std::int64_t parent = ring.constant(x, v, w);
        const std::int64_t child = ring.constant(v, y, z);
        const std::int64_t block = checked_mul(parent, child);
        if (position < block) return {v, position / child, position % child};
        position -= block;
    }
    throw std::logic_error("associate: the two bracketings have different sizes");
}

std::array<PlanarTree, 5> pentagon_vertices() {
    return {PlanarTree::parse("(,(,(,)))"), PlanarTree::parse("((,),(,))"), PlanarTree::parse("(,((,),))"),
            PlanarTree::parse("((,(,)),)"), PlanarTree::parse("(((,),),)")};
}

namespace {

void check_rotatable(const PlanarTree& parent) {
    if (parent.children().size() != 2 || parent.children()[1].is_leaf() ||
        parent.children()[1].children().size() != 2)
        throw std::invalid_argument("rotate: vertex needs a binary right child");
}

VertexPath extended(VertexPath path, std::initializer_list<std::size_t> steps) {
    path.insert(path.end(), steps);
    return path;
}

// Where each source vertex lands after y(zw) -> (yz)w at `at`; the old right
// child becomes the new left child.
std::size_t rotated_vertex(const trees::TreeLayout& target, const VertexPath& at, const VertexPath& p) {
    auto has_prefix = [&](const VertexPath& prefix) {
        return p.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
    };
    auto moved = [&](const VertexPath& from, const VertexPath& to) {
        VertexPath q = to;
        q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(from.size()), p.end());
        return target.index_of(q);
    };
    const auto y = extended(at, {0}), child = extended(at, {1}), z = extended(at, {1, 0}), w = extended(at, {1, 1});
    if (p == child) return target.index_of(y);
    if (has_prefix(y)) return moved(y, extended(at, {0, 0}));
    if (has_prefix(z)) return moved(z, extended(at, {0, 1}));
    if (has_prefix(w)) return moved(w, extended(at, {1}));
    return target.index_of(p);
}

// Position map from `source` to `target` along one associator edge.
std::vector<std::size_t> edge_map(const FusionRing& ring, const MarkedIndexSet& source,
                                  const MarkedIndexSet& target, const VertexPath& at) {
    const auto& from = source.layout();
    const auto& to = target.layout();
    std::vector<std::size_t> vmap(from.vertices.size());
    for (std::size_t v = 0; v < vmap.size(); ++v) vmap[v] = rotated_vertex(to, at, from.vertices[v].path);
    const std::size_t parent = from.index_of(at), child = from.index_of(extended(at, {1}));
    const std::size_t y = from.index_of(extended(at, {0})), z = from.index_of(extended(at, {1, 0})),
                      w = from.index_of(extended(at, {1, 1}));
    const std::size_t new_parent = to.index_of(at), new_child = to.index_of(extended(at, {0}));

    std::vector<std::int64_t> src_index(from.vertices.size(), -1);
    std::vector<Element> labels(to.vertices.size());
    std::vector<std::int64_t> index(to.vertices.size(), -1);
    MarkedIndex key{std::vector<Element>(to.internal_edges.size()), std::vector<std::int64_t>(to.internal_order.size())};
    std::vector<std::size_t> image(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        const auto full = source.full_labels(source[i]);
        for (std::size_t k = 0; k < from.internal_order.size(); ++k) src_index[from.internal_order[k]] = source[i].indices[k];
        for (std::size_t v = 0; v < vmap.size(); ++v) {
            labels[vmap[v]] = full[v];
            index[vmap[v]] = src_index[v];
        }
        const auto moved = associate(ring, full[parent], full[y], full[z], full[w],
                                     {full[child], src_index[parent], src_index[child]});
        labels[new_child] = moved.label;
        index[new_child] = moved.second;
        index[new_parent] = moved.first;
        for (std::size_t k = 0; k < to.internal_edges.size(); ++k) key.labels[k] = labels[to.internal_edges[k]];
        for (std::size_t k = 0; k < to.internal_order.size(); ++k) key.indices[k] = index[to.internal_order[k]];
        image[i] = target.position(key);
    }
    return image;
}

Permutation chain(const std::vector<std::vector<std::size_t>>& maps, std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        for (const auto& m : maps) p = m[p];
        image[i] = p;
    }
    return Permutation(std::move(image));
}

} // namespace

PlanarTree rotate(const PlanarTree& tree, const VertexPath& at) {
    const PlanarTree& parent = tree.at(at);
    check_rotatable(parent);
    const auto& y = parent.children()[0];
    const auto& z = parent.children()[1].children()[0];
    const auto& w = parent.children()[1].children()[1];
    PlanarTree replacement = PlanarTree::node({PlanarTree::node({y, z}), w});
    if (at.empty()) return replacement;
    // Rebuild the spine down to `at`.
    auto rebuild = [&](auto&& self, const PlanarTree& t, std::size_t depth) -> PlanarTree {
        std::vector<PlanarTree> children = t.children();
        children[at[depth]] = depth + 1 == at.size() ? replacement : self(self, t.children()[at[depth]], depth + 1);
        return PlanarTree::node(std::move(children));
    };
    return rebuild(rebuild, tree, 0);
}

PentagonLoop pentagon_loop(const FusionRing& ring, Element x, std::array<Element, 4> inputs) {
    if (x >= ring.rank()) throw std::out_of_range("pentagon_loop: output out of range");
    static const auto vertices = pentagon_vertices();
    static const auto layouts = [] {
        std::array<std::shared_ptr<const trees::TreeLayout>, 5> out;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::make_shared<const trees::TreeLayout>(vertices[k]);
        return out;
    }();
    std::vector<MarkedIndexSet> sets;
    sets.reserve(vertices.size());
    sets.emplace_back(ring, vertices[0], layouts[0], inputs, x);
    const std::size_t n = sets[0].size();
    if (n == 0) {
        const auto empty = Permutation::identity(0);
        return PentagonLoop{std::move(sets[0]), empty, empty, empty};
    }
    for (std::size_t k = 1; k < vertices.size(); ++k) sets.emplace_back(ring, vertices[k], layouts[k], inputs, x);
    for (const auto& s : sets)
        if (s.size() != n) throw std::logic_error("pentagon_loop: vertex sets differ in size");

    const VertexPath root{}, right{1}, left{0};
    // (x1x2)(x3x4) side: rotate at the root twice.
    Permutation two_edges = chain({edge_map(ring, sets[0], sets[1], root),
                                   edge_map(ring, sets[1], sets[4], root)},
                                  n);
    // x1((x2x3)x4), (x1(x2x3))x4 side.
    Permutation three_edges = chain({edge_map(ring, sets[0], sets[2], right),
                                     edge_map(ring, sets[2], sets[3], root),
                                     edge_map(ring, sets[3], sets[4], left)},
                                    n);
    Permutation composite = two_edges.inverse().after(three_edges);
    return PentagonLoop{std::move(sets[0]), std::move(two_edges), std::move(three_edges), std::move(composite)};
}

int pentagon_sign_bruteforce(const FusionRing& ring, Element x, std::array<Element, 4> inputs) {
    return sort_sign_oracle(pentagon_loop(ring, x, inputs).composite);
}

namespace {

// Parity of sum_{i<j} v_i v_j.
int ordered_pair_parity(const std::vector<std::int64_t>& v) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) total = checked_add(total, checked_mul(v[i], v[j]));
    return static_cast<int>(total & 1);
}

} // namespace

int ClosedFormTerms::six_term_sum() const {
    return right_comb_reindex ^ balanced_reindex ^ right_middle_reindex ^ left_middle_reindex ^
           left_comb_reindex ^ balanced_transposition;
}

int ClosedFormTerms::total() const { return six_term_sum() ^ right_inner_passage ^ left_inner_passage; }

ClosedFormTerms closed_form_terms(const FusionRing& ring, Element x, std::array<Element, 4> in) {
    const std::size_t r = ring.rank();
    if (x >= r) throw std::out_of_range("closed_form_terms: output out of range");
    for (auto e : in)
        if (e >= r) throw std::out_of_range("closed_form_terms: input out of range");
    const auto [x1, x2, x3, x4] = in;
    auto m = [&](Element out, Element a, Element b) { return ring.constant(out, a, b); };
    auto product = [](std::int64_t a, std::int64_t b, std::int64_t c) { return checked_mul(checked_mul(a, b), c); };

    using Sizes = std::vector<std::vector<std::int64_t>>;
    Sizes ab(r, std::vector<std::int64_t>(r)), cb = ab, ae = ab, de = ab, dc = ab;
    for (Element p = 0; p < r; ++p)
        for (Element q = 0; q < r; ++q) {
            ab[p][q] = product(m(x, x1, p), m(p, x2, q), m(q, x3, x4));
            cb[p][q] = product(m(x, p, q), m(p, x1, x2), m(q, x3, x4));
            ae[p][q] = product(m(x, x1, p), m(p, q, x4), m(q, x2, x3));
            de[p][q] = product(m(x, p, x4), m(p, x1, q), m(q, x2, x3));
            dc[p][q] = product(m(x, p, x4), m(p, q, x3), m(q, x1, x2));
        }

    ClosedFormTerms t{};
    t.right_comb_reindex = block_reindex_sign(ab);
    t.balanced_reindex = block_reindex_sign(cb);
    t.right_middle_reindex = block_reindex_sign(ae);
    t.left_middle_reindex = block_reindex_sign(de);
    t.left_comb_reindex = block_reindex_sign(dc);

    int transposition = 0;
    for (Element c = 0; c < r; ++c)
        for (Element b = 0; b < r; ++b)
            transposition ^= static_cast<int>(m(x, c, b) & 1) & lex_swap_sign(m(c, x1, x2), m(b, x3, x4));
    t.balanced_transposition = transposition;

    int right_inner = 0;
    for (Element a = 0; a < r; ++a) {
        if ((choose2(m(x, x1, a)) & 1) == 0) continue;
        std::vector<std::int64_t> y(r), z(r);
        for (Element q = 0; q < r; ++q) {
            y[q] = checked_mul(m(a, x2, q), m(q, x3, x4));
            z[q] = checked_mul(m(a, q, x4), m(q, x2, x3));
        }
        right_inner ^= ordered_pair_parity(y) ^ ordered_pair_parity(z);
    }
    t.right_inner_passage = right_inner;

    int left_inner = 0;
    for (Element d = 0; d < r; ++d) {
        if ((choose2(m(x, d, x4)) & 1) == 0) continue;
        std::vector<std::int64_t> w(r), v(r);
        for (Element q = 0; q < r; ++q) {
            w[q] = checked_mul(m(d, x1, q), m(q, x2, x3));
            v[q] = checked_mul(m(d, q, x3), m(q, x1, x2));
        }
        left_inner ^= ordered_pair_parity(w) ^ ordered_pair_parity(v);
    }
    t.left_inner_passage = left_inner;
    return t;
}

int pentagon_sign_closed(const FusionRing& ring, Element x, std::array<Element, 4> inputs) {
    return closed_form_terms(ring, x, inputs).total();
}

ObstructionCocycle first_obstruction(const FusionRing& ring, Verification verification) {
    ObstructionCocycle result{hochschild::Cochain(ring, 4), verification == Verification::WithOracle, {}};
    const std::size_t r = ring.rank();
    for (std::size_t t = 0; t < result.alpha.tuples(); ++t) {
        const auto tuple = result.alpha.tuple_at(t);
        const std::array<Element, 4> in{tuple[0], tuple[1], tuple[2], tuple[3]};
        for (Element x = 0; x < r; ++x) {
            const int closed = pentagon_sign_closed(ring, x, in);
            result.alpha.set(tuple, x, closed != 0);
            if (result.oracle_checked) {
                const int brute = pentagon_sign_bruteforce(ring, x, in);
                if (brute != closed) result.mismatches.push_back({in, x, closed, brute});
            }
        }
    }
    return result;
}

} // namespace fusionobs::obstruction
