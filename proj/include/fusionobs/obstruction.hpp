#pragma once

#include "fusionobs/fusion_ring.hpp"
#include "fusionobs/hochschild.hpp"
#include "fusionobs/permutation.hpp"
#include "fusionobs/trees.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fusionobs::obstruction {

// Signs are additive: 0 stands for +1 and 1 for -1.

/// Parity of the order-preserving re-sort of X x Y (lexicographic) onto Y x X.
int lex_swap_sign(std::int64_t size_x, std::int64_t size_y);

/// Parity of re-sorting the disjoint union of blocks X(a,b), ordered by (a,b), into
/// the order by (b,a); sizes[a][b] = |X(a,b)|.
int block_reindex_sign(const std::vector<std::vector<std::int64_t>>& sizes);

/// One local associator triple: the summand label and the two local indices.
struct AssociatorIndex {
    Element label;
    std::int64_t first;
    std::int64_t second;

    bool operator==(const AssociatorIndex&) const = default;
};

/// The order-preserving bijection
///     U_u X^x_{y,u} x X^u_{z,w}  ->  U_v X^x_{v,w} x X^v_{y,z}
/// for y(zw) -> (yz)w. The source is ordered by (u, i, j) with i indexing X^x_{y,u}
/// and j indexing X^u_{z,w}; the target by (v, s, t) with s indexing the new
/// parent factor X^x_{v,w} and t indexing the new child factor X^v_{y,z}.
AssociatorIndex associate(const FusionRing& ring, Element x, Element y, Element z, Element w,
                          AssociatorIndex source);

/// The five binary trees with four ends, in the order
/// x1(x2(x3x4)), (x1x2)(x3x4), x1((x2x3)x4), (x1(x2x3))x4, ((x1x2)x3)x4.
std::array<trees::PlanarTree, 5> pentagon_vertices();

/// Rotation y(zw) -> (yz)w at the vertex `at`, whose right child must be internal.
trees::PlanarTree rotate(const trees::PlanarTree& tree, const trees::VertexPath& at);

struct PentagonLoop {
    trees::MarkedIndexSet start;  // the right comb's marked index set
    Permutation two_edge_side;    // start -> left comb along (x1x2)(x3x4), as positions
    Permutation three_edge_side;  // start -> left comb along the other three vertices
    Permutation composite;        // two_edge_side^-1 after three_edge_side
};

/// Builds the permutation of the right comb's marked index set obtained by going
/// around the pentagon of associators for output x and inputs (x1, x2, x3, x4).
PentagonLoop pentagon_loop(const FusionRing& ring, Element x, std::array<Element, 4> inputs);

/// Parity of the pentagon loop permutation.
int pentagon_sign_bruteforce(const FusionRing& ring, Element x, std::array<Element, 4> inputs);

/// Parities of the individual closed-form contributions, one per discrepancy
/// between a pentagon edge and the order-preserving map of its end sets.
struct ClosedFormTerms {
    int right_comb_reindex;     // sum over a>a', b<b'
    int balanced_reindex;       // sum over c>c', b<b'
    int right_middle_reindex;   // sum over a>a', e<e'
    int left_middle_reindex;    // sum over d>d', e<e'
    int left_comb_reindex;      // sum over d>d', c<c'
    int balanced_transposition; // sum over c,b of m^x_{c,b} C(m^c_{x1,x2},2) C(m^b_{x3,x4},2)
    // Edges acting on the two non-root vertices: the untouched root factor passes
    // over the inner summand label on both sides of the edge.
    int right_inner_passage;    // sum_a C(m^x_{x1,a},2) [sum_{b<b'} Y_b Y_b' + sum_{e<e'} Z_e Z_e']
    int left_inner_passage;     // sum_d C(m^x_{d,x4},2) [sum_{e<e'} W_e W_e' + sum_{c<c'} V_c V_c']

    /// Sum of the first six terms only.
    int six_term_sum() const;
    int total() const;
};

ClosedFormTerms closed_form_terms(const FusionRing& ring, Element x, std::array<Element, 4> inputs);

/// Closed-form parity of the pentagon loop (all eight terms).
int pentagon_sign_closed(const FusionRing& ring, Element x, std::array<Element, 4> inputs);

struct OracleMismatch {
    std::array<Element, 4> inputs;
    Element output;
    int closed;
    int bruteforce;
};

struct ObstructionCocycle {
    hochschild::Cochain alpha;            // degree 4; component x of alpha(x1..x4) is alpha^x
    bool oracle_checked = false;
    std::vector<OracleMismatch> mismatches;
};

enum class Verification { ClosedOnly, WithOracle };

/// alpha(x1,x2,x3,x4) = sum_x x * alpha^x for all rank^4 tuples.
ObstructionCocycle first_obstruction(const FusionRing& ring,
                                     Verification verification = Verification::ClosedOnly);

} // namespace fusionobs::obstruction
