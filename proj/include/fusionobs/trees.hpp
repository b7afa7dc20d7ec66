#pragma once

#include "fusionobs/fusion_ring.hpp"

#include <compare>
#include <memory>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusionobs::trees {

/// Path from the root to a vertex: the sequence of child positions taken.
using VertexPath = std::vector<std::size_t>;

/// Rooted planar tree with ordered children. A vertex without children is an end
/// (leaf); every other vertex has at least two children. The one-vertex tree is the
/// bare edge, used as a placeholder when grafting.
///
/// Serialized with the grammar
///     tree := '(' tree (',' tree)+ ')' | <empty>
/// where the empty word is an end. The corolla on three ends is "(,,)", the left
/// comb on three ends is "((,),)".
class PlanarTree {
public:
    PlanarTree() = default;  // the bare edge

    static PlanarTree leaf() { return {}; }
    static PlanarTree corolla(std::size_t ends);
    /// Throws std::invalid_argument if fewer than two children are given.
    static PlanarTree node(std::vector<PlanarTree> children);
    static PlanarTree parse(std::string_view text);
    /// Left comb ((..(1,2),3)..,k) and right comb (1,(2,(..,k))).
    static PlanarTree left_comb(std::size_t ends);
    static PlanarTree right_comb(std::size_t ends);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<PlanarTree>& children() const { return children_; }

    std::size_t ends() const;
    std::size_t internal_vertices() const;
    /// Stratum index i with internal_vertices = ends - 1 - i.
    std::size_t stratum() const { return ends() - 1 - internal_vertices(); }
    bool is_binary() const;

    const PlanarTree& at(const VertexPath& path) const;

    std::string serialize() const;

    auto operator<=>(const PlanarTree& other) const { return serialize() <=> other.serialize(); }
    bool operator==(const PlanarTree& other) const { return children_ == other.children_; }

private:
    explicit PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {}
    void serialize_into(std::string& out) const;

    std::vector<PlanarTree> children_;
};

inline constexpr std::size_t kMinEnds = 2;
inline constexpr std::size_t kMaxEnds = 8;

/// All planar trees with `ends` ends, optionally restricted to one stratum,
/// sorted by serialization.
std::vector<PlanarTree> enumerate_trees(std::size_t ends, std::optional<std::size_t> stratum = {});

/// Internal edges, each identified by the path to its upper (non-root internal) vertex.
std::vector<VertexPath> internal_edges(const PlanarTree& tree);

/// Merges the vertex at `edge` into its parent, splicing its children in place.
PlanarTree contract_edge(const PlanarTree& tree, const VertexPath& edge);

/// Glues subtrees[i] onto end i (left to right). Bare edges leave an end unchanged.
PlanarTree graft(const PlanarTree& tree, std::span<const PlanarTree> subtrees);

/// Internal vertices sorted by depth, then left to right within a depth level.
std::vector<VertexPath> vertex_order(const PlanarTree& tree);

/// Flattened view of a binary tree used for markings. Vertex 0 is the root; every
/// vertex owns the edge above it (the root owns the root edge).
struct TreeLayout {
    struct Vertex {
        VertexPath path;
        std::optional<std::size_t> parent;
        std::vector<std::size_t> children;  // indices into vertices
        std::optional<std::size_t> end;     // end number for leaves
        std::size_t depth = 0;
    };
    std::vector<Vertex> vertices;              // preorder
    std::vector<std::size_t> internal_order;   // internal vertices in vertex_order
    std::vector<std::size_t> internal_edges;   // edge owners: non-root internal vertices, ordered by internal_order

    explicit TreeLayout(const PlanarTree& tree);
    std::size_t index_of(const VertexPath& path) const;
};

/// Edge labelling f: E -> S of a binary tree with the ends and root edge prescribed.
struct Marking {
    std::vector<Element> labels;  // one label per vertex of the layout (edge above it)
};

std::vector<Marking> enumerate_markings(const FusionRing& ring, const PlanarTree& tree,
                                        std::span<const Element> inputs, Element output);

/// Member of a marked index set: labels of the internal edges (in edge order) and
/// 0-based local indices at every internal vertex (in vertex order).
struct MarkedIndex {
    std::vector<Element> labels;
    std::vector<std::int64_t> indices;

    auto operator<=>(const MarkedIndex&) const = default;
};

/// The ordered set of (marking, local indices) for a binary tree. Members are
/// sorted by labels, then indices, lexicographically.
class MarkedIndexSet {
public:
    MarkedIndexSet(const FusionRing& ring, const PlanarTree& tree, std::span<const Element> inputs,
                   Element output);
    /// Reuses a layout built from `tree`.
    MarkedIndexSet(const FusionRing& ring, const PlanarTree& tree, std::shared_ptr<const TreeLayout> layout,
                   std::span<const Element> inputs, Element output);

    const PlanarTree& tree() const { return tree_; }
    const TreeLayout& layout() const { return *layout_; }
    const std::vector<Element>& inputs() const { return inputs_; }
    Element output() const { return output_; }

    std::size_t size() const { return members_.size(); }
    const MarkedIndex& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<MarkedIndex>& members() const { return members_; }
    /// Position of a member; throws std::out_of_range if absent.
    std::size_t position(const MarkedIndex& member) const;

    /// Label of every edge (by layout vertex) for a member.
    std::vector<Element> full_labels(const MarkedIndex& member) const;

private:
    PlanarTree tree_;
    std::shared_ptr<const TreeLayout> layout_;
    std::vector<Element> inputs_;
    Element output_;
    std::vector<MarkedIndex> members_;
};

MarkedIndexSet marked_index_set(const FusionRing& ring, const PlanarTree& tree,
                                std::span<const Element> inputs, Element output);

} // namespace fusionobs::trees
