#include "fusionobs/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fusionobs::trees {

PlanarTree PlanarTree::corolla(std::size_t ends) {
    if (ends < 2) throw std::invalid_argument("corolla needs at least two ends");
    return PlanarTree(std::vector<PlanarTree>(ends));
}

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
    if (children.size() < 2) throw std::invalid_argument("internal vertex needs arity >= 2");
    return PlanarTree(std::move(children));
}

PlanarTree PlanarTree::left_comb(std::size_t ends) {
    if (ends < 2) throw std::invalid_argument("comb needs at least two ends");
    PlanarTree t = node({leaf(), leaf()});
    for (std::size_t k = 3; k <= ends; ++k) t = node({std::move(t), leaf()});
    return t;
}

PlanarTree PlanarTree::right_comb(std::size_t ends) {
    if (ends < 2) throw std::invalid_argument("comb needs at least two ends");
    PlanarTree t = node({leaf(), leaf()});
    for (std::size_t k = 3; k <= ends; ++k) t = node({leaf(), std::move(t)});
    return t;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    PlanarTree tree() {
        if (pos >= text.size() || text[pos] != '(') return PlanarTree::leaf();
        ++pos;
        std::vector<PlanarTree> children;
        children.push_back(tree());
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            children.push_back(tree());
        }
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("tree parse error at offset " + std::to_string(pos));
        ++pos;
        return PlanarTree::node(std::move(children));
    }
};

} // namespace

PlanarTree PlanarTree::parse(std::string_view text) {
    Parser p{text};
    PlanarTree t = p.tree();
    if (p.pos != text.size())
        throw std::invalid_argument("tree parse error: trailing input at offset " + std::to_string(p.pos));
    return t;
}

std::size_t PlanarTree::ends() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children_) n += c.ends();
    return n;
}

std::size_t PlanarTree::internal_vertices() const {
    if (is_leaf()) return 0;
    std::size_t n = 1;
    for (const auto& c : children_) n += c.internal_vertices();
    return n;
}

bool PlanarTree::is_binary() const {
    if (is_leaf()) return true;
    return children_.size() == 2 &&
           std::all_of(children_.begin(), children_.end(), [](const auto& c) { return c.is_binary(); });
}

const PlanarTree& PlanarTree::at(const VertexPath& path) const {
    const PlanarTree* t = this;
    for (auto step : path) {
        if (step >= t->children_.size()) throw std::out_of_range("vertex path leaves the tree");
        t = &t->children_[step];
    }
    return *t;
}

void PlanarTree::serialize_into(std::string& out) const {
    if (is_leaf()) return;
    out.push_back('(');
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out.push_back(',');
        children_[i].serialize_into(out);
    }
    out.push_back(')');
}

std::string PlanarTree::serialize() const {
    std::string s;
    serialize_into(s);
    return s;
}

namespace {

// All trees with n ends (n >= 1); n = 1 gives the bare edge.
const std::vector<PlanarTree>& all_trees(std::size_t n, std::map<std::size_t, std::vector<PlanarTree>>& memo);

// Sequences of trees whose end counts sum to n, with at least min_parts parts.
void sequences(std::size_t n, std::size_t min_parts, std::vector<PlanarTree>& prefix,
               std::vector<std::vector<PlanarTree>>& out,
               std::map<std::size_t, std::vector<PlanarTree>>& memo) {
    if (n == 0) {
        if (prefix.size() >= min_parts) out.push_back(prefix);
        return;
    }
    for (std::size_t first = 1; first <= n; ++first) {
        // A single part holding all n ends would be the whole tree.
        if (prefix.empty() && first == n && min_parts >= 2) continue;
        for (const auto& t : all_trees(first, memo)) {
            prefix.push_back(t);
            sequences(n - first, min_parts, prefix, out, memo);
            prefix.pop_back();
        }
    }
}

const std::vector<PlanarTree>& all_trees(std::size_t n, std::map<std::size_t, std::vector<PlanarTree>>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<PlanarTree> result;
    if (n == 1) {
        result.push_back(PlanarTree::leaf());
    } else {
        std::vector<std::vector<PlanarTree>> child_lists;
        std::vector<PlanarTree> prefix;
        sequences(n, 2, prefix, child_lists, memo);
        for (auto& cl : child_lists) result.push_back(PlanarTree::node(std::move(cl)));
    }
    return memo.emplace(n, std::move(result)).first->second;
}

} // namespace

std::vector<PlanarTree> enumerate_trees(std::size_t ends, std::optional<std::size_t> stratum) {
    if (ends < kMinEnds || ends > kMaxEnds)
        throw std::out_of_range("enumerate_trees: ends must be in 2..8");
    if (stratum && *stratum > ends - 2)
        throw std::out_of_range("enumerate_trees: stratum must be in 0..ends-2");
    std::map<std::size_t, std::vector<PlanarTree>> memo;
    std::vector<PlanarTree> out;
    for (const auto& t : all_trees(ends, memo))
        if (!stratum || t.stratum() == *stratum) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void collect_internal_edges(const PlanarTree& t, VertexPath& path, std::vector<VertexPath>& out) {
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        const auto& c = t.children()[i];
        if (c.is_leaf()) continue;
        path.push_back(i);
        out.push_back(path);
        collect_internal_edges(c, path, out);
        path.pop_back();
    }
}

PlanarTree contract_at(const PlanarTree& t, const VertexPath& edge, std::size_t depth) {
    std::vector<PlanarTree> children;
    const std::size_t step = edge[depth];
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        const auto& c = t.children()[i];
        if (i != step) {
            children.push_back(c);
        } else if (depth + 1 == edge.size()) {
            children.insert(children.end(), c.children().begin(), c.children().end());
        } else {
            children.push_back(contract_at(c, edge, depth + 1));
        }
    }
    return PlanarTree::node(std::move(children));
}

PlanarTree graft_from(const PlanarTree& t, std::span<const PlanarTree> subtrees, std::size_t& next) {
    if (t.is_leaf()) return subtrees[next++];
    std::vector<PlanarTree> children;
    for (const auto& c : t.children()) children.push_back(graft_from(c, subtrees, next));
    return PlanarTree::node(std::move(children));
}

} // namespace

std::vector<VertexPath> internal_edges(const PlanarTree& tree) {
    std::vector<VertexPath> out;
    VertexPath path;
    collect_internal_edges(tree, path, out);
    return out;
}

PlanarTree contract_edge(const PlanarTree& tree, const VertexPath& edge) {
    if (edge.empty()) throw std::invalid_argument("contract_edge: the root edge cannot be contracted");
    const PlanarTree& upper = tree.at(edge);
    if (upper.is_leaf()) throw std::invalid_argument("contract_edge: a leaf edge cannot be contracted");
    return contract_at(tree, edge, 0);
}

PlanarTree graft(const PlanarTree& tree, std::span<const PlanarTree> subtrees) {
    if (subtrees.size() != tree.ends())
        throw std::invalid_argument("graft: need one subtree per end (" + std::to_string(tree.ends()) +
                                    "), got " + std::to_string(subtrees.size()));
    std::size_t next = 0;
    return graft_from(tree, subtrees, next);
}

std::vector<VertexPath> vertex_order(const PlanarTree& tree) {
    // Breadth-first traversal visits depth levels in order and each level left to right.
    std::vector<VertexPath> order;
    if (tree.is_leaf()) return order;
    std::vector<VertexPath> level{{}};
    while (!level.empty()) {
        std::vector<VertexPath> next;
        for (auto& p : level) {
            const auto& t = tree.at(p);
            for (std::size_t i = 0; i < t.children().size(); ++i) {
                if (t.children()[i].is_leaf()) continue;
                auto q = p;
                q.push_back(i);
                next.push_back(std::move(q));
            }
            order.push_back(std::move(p));
        }
        level = std::move(next);
    }
    return order;
}

TreeLayout::TreeLayout(const PlanarTree& tree) {
    std::size_t end_counter = 0;
    struct Frame {
        const PlanarTree* t;
        VertexPath path;
        std::optional<std::size_t> parent;
    };
    std::vector<Frame> stack{{&tree, {}, std::nullopt}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const std::size_t idx = vertices.size();
        Vertex v;
        v.path = f.path;
        v.parent = f.parent;
        v.depth = f.path.size();
        if (f.t->is_leaf()) v.end = end_counter++;
        vertices.push_back(std::move(v));
        if (f.parent) vertices[*f.parent].children.push_back(idx);
        for (std::size_t i = f.t->children().size(); i-- > 0;) {
            auto p = f.path;
            p.push_back(i);
            stack.push_back({&f.t->children()[i], std::move(p), idx});
        }
    }
    for (const auto& p : vertex_order(tree)) {
        const std::size_t idx = index_of(p);
        internal_order.push_back(idx);
        if (!p.empty()) internal_edges.push_back(idx);
    }
}

std::size_t TreeLayout::index_of(const VertexPath& path) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].path == path) return i;
    throw std::out_of_range("TreeLayout: no vertex at path");
}

namespace {

void check_marking_inputs(const FusionRing& ring, const PlanarTree& tree,
                          std::span<const Element> inputs, Element output) {
    if (tree.is_leaf() || !tree.is_binary())
        throw std::invalid_argument("marked index sets need a binary tree with at least one vertex");
    if (inputs.size() != tree.ends())
        throw std::invalid_argument("marking: input count differs from the number of ends");
    for (auto x : inputs)
        if (x >= ring.rank()) throw std::out_of_range("marking: input element out of range");
    if (output >= ring.rank()) throw std::out_of_range("marking: output element out of range");
}

// Multiplicity at internal vertex v for the given edge labels.
std::int64_t local_multiplicity(const FusionRing& ring, const TreeLayout& layout,
                                const std::vector<Element>& labels, std::size_t v) {
    const auto& vert = layout.vertices[v];
    return ring.constant(labels[v], labels[vert.children[0]], labels[vert.children[1]]);
}

// Visits every labelling of the internal edges, in lexicographic order of the
// labels taken in edge order, with ends and the root edge fixed.
template <typename Visit>
void for_each_labelling(const FusionRing& ring, const TreeLayout& layout,
                        std::span<const Element> inputs, Element output, Visit&& visit) {
    std::vector<Element> labels(layout.vertices.size(), 0);
    labels[0] = output;
    for (std::size_t v = 0; v < layout.vertices.size(); ++v)
        if (layout.vertices[v].end) labels[v] = inputs[*layout.vertices[v].end];
    const auto& edges = layout.internal_edges;
    const std::size_t r = ring.rank();
    std::vector<Element> digits(edges.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < edges.size(); ++i) labels[edges[i]] = digits[i];
        visit(labels, digits);
        std::size_t i = edges.size();
        while (i > 0 && ++digits[i - 1] == r) digits[--i] = 0;
        if (i == 0) break;
    }
}

} // namespace

std::vector<Marking> enumerate_markings(const FusionRing& ring, const PlanarTree& tree,
                                        std::span<const Element> inputs, Element output) {
    check_marking_inputs(ring, tree, inputs, output);
    TreeLayout layout(tree);
    std::vector<Marking> out;
    for_each_labelling(ring, layout, inputs, output,
                       [&](const std::vector<Element>& labels, const std::vector<Element>&) {
                           out.push_back(Marking{labels});
                       });
    return out;
}

MarkedIndexSet::MarkedIndexSet(const FusionRing& ring, const PlanarTree& tree,
                               std::span<const Element> inputs, Element output)
    : MarkedIndexSet(ring, tree, std::make_shared<const TreeLayout>(tree), inputs, output) {}

MarkedIndexSet::MarkedIndexSet(const FusionRing& ring, const PlanarTree& tree,
                               std::shared_ptr<const TreeLayout> layout, std::span<const Element> inputs,
                               Element output)
    : tree_(tree), layout_(std::move(layout)), inputs_(inputs.begin(), inputs.end()), output_(output) {
    check_marking_inputs(ring, tree, inputs, output);
    const auto& lay = *layout_;
    const auto& order = lay.internal_order;
    for_each_labelling(ring, lay, inputs, output,
                       [&](const std::vector<Element>& labels, const std::vector<Element>& digits) {
                           std::vector<std::int64_t> sizes;
                           for (auto v : order) {
                               const auto m = local_multiplicity(ring, lay, labels, v);
                               if (m == 0) return;
                               sizes.push_back(m);
                           }
                           // Odometer over the per-vertex index ranges, last vertex fastest.
                           std::vector<std::int64_t> idx(sizes.size(), 0);
                           while (true) {
                               members_.push_back(MarkedIndex{digits, idx});
                               std::size_t i = idx.size();
                               while (i > 0 && ++idx[i - 1] == sizes[i - 1]) idx[--i] = 0;
                               if (i == 0) break;
                           }
                       });
}

std::size_t MarkedIndexSet::position(const MarkedIndex& member) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), member);
    if (it == members_.end() || *it != member) throw std::out_of_range("member not in marked index set");
    return static_cast<std::size_t>(it - members_.begin());
}

std::vector<Element> MarkedIndexSet::full_labels(const MarkedIndex& member) const {
    const auto& lay = *layout_;
    std::vector<Element> labels(lay.vertices.size(), 0);
    labels[0] = output_;
    for (std::size_t v = 0; v < lay.vertices.size(); ++v)
        if (lay.vertices[v].end) labels[v] = inputs_[*lay.vertices[v].end];
    for (std::size_t i = 0; i < lay.internal_edges.size(); ++i)
        labels[lay.internal_edges[i]] = member.labels[i];
    return labels;
}

MarkedIndexSet marked_index_set(const FusionRing& ring, const PlanarTree& tree,
                                std::span<const Element> inputs, Element output) {
    return MarkedIndexSet(ring, tree, inputs, output);
}

} // namespace fusionobs::trees
