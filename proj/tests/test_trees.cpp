#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionobs/trees.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace fusionobs;
using namespace fusionobs::trees;

namespace {

// Brute-force generator: all compositions of `ends` into >= 2 ordered parts, recursively.
std::set<std::string> brute_trees(std::size_t ends) {
    if (ends == 1) return {""};
    std::set<std::string> out;
    auto parts = [&](auto&& self, std::size_t left, std::vector<std::size_t>& acc) -> void {
        if (left == 0) {
            if (acc.size() < 2) return;
            std::vector<std::vector<std::string>> options;
            for (auto p : acc) {
                const auto sub = brute_trees(p);
                options.emplace_back(sub.begin(), sub.end());
            }
            std::vector<std::size_t> pick(acc.size(), 0);
            while (true) {
                std::string s = "(";
                for (std::size_t i = 0; i < acc.size(); ++i) s += (i ? "," : "") + options[i][pick[i]];
                out.insert(s + ")");
                std::size_t i = pick.size();
                while (i > 0 && ++pick[i - 1] == options[i - 1].size()) pick[--i] = 0;
                if (i == 0) break;
            }
            return;
        }
        for (std::size_t p = 1; p <= left; ++p) {
            acc.push_back(p);
            self(self, left - p, acc);
            acc.pop_back();
        }
    };
    std::vector<std::size_t> acc;
    parts(parts, ends, acc);
    return out;
}

} // namespace

TEST_CASE("binary tree counts are Catalan numbers") {
    for (std::size_t k = 2; k <= 8; ++k) CHECK(enumerate_trees(k, 0).size() == oracle::catalan(static_cast<unsigned>(k - 1)));
}

TEST_CASE("enumeration matches brute-force generation") {
    for (std::size_t k = 2; k <= 6; ++k) {
        std::set<std::string> got;
        for (const auto& t : enumerate_trees(k)) got.insert(t.serialize());
        CHECK(got == brute_trees(k));
    }
}

TEST_CASE("strata") {
    CHECK(enumerate_trees(4, 0).size() == 5);
    const auto two = enumerate_trees(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == PlanarTree::corolla(2));
    const auto top = enumerate_trees(4, 2);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == PlanarTree::corolla(4));
    for (const auto& t : enumerate_trees(5)) {
        CHECK(t.ends() == 5);
        CHECK(t.internal_vertices() == 4 - t.stratum());
    }
    CHECK_THROWS(enumerate_trees(1));
    CHECK_THROWS(enumerate_trees(9));
}

TEST_CASE("serialization round-trips") {
    for (std::size_t k = 2; k <= 6; ++k)
        for (const auto& t : enumerate_trees(k)) CHECK(PlanarTree::parse(t.serialize()) == t);
    CHECK(PlanarTree::corolla(3).serialize() == "(,,)");
    CHECK(PlanarTree::left_comb(3).serialize() == "((,),)");
    CHECK(PlanarTree::right_comb(4).serialize() == "(,(,(,)))");
    CHECK(PlanarTree::parse("").is_leaf());
    CHECK_THROWS(PlanarTree::parse("(,"));
    CHECK_THROWS(PlanarTree::parse("()"));
    CHECK_THROWS(PlanarTree::parse("(,)x"));
    CHECK_THROWS(PlanarTree::node({PlanarTree::leaf()}));
}

TEST_CASE("contraction") {
    const auto lc3 = PlanarTree::left_comb(3);
    const auto edges = internal_edges(lc3);
    REQUIRE(edges.size() == 1);
    CHECK(contract_edge(lc3, edges[0]) == PlanarTree::corolla(3));

    const auto rc4 = PlanarTree::right_comb(4);
    const auto lower = contract_edge(rc4, VertexPath{1, 1});
    CHECK(lower == PlanarTree::parse("(,(,,))"));
    CHECK(lower.stratum() == 1);

    CHECK_THROWS(contract_edge(PlanarTree::corolla(4), VertexPath{}));
    CHECK_THROWS(contract_edge(PlanarTree::corolla(4), VertexPath{0}));
    CHECK_THROWS(contract_edge(rc4, VertexPath{0}));
}

TEST_CASE("contraction raises the stratum and terminates at the corolla") {
    for (std::size_t k = 3; k <= 6; ++k)
        for (const auto& t : enumerate_trees(k)) {
            for (const auto& e : internal_edges(t)) CHECK(contract_edge(t, e).stratum() == t.stratum() + 1);
            PlanarTree cur = t;
            while (!internal_edges(cur).empty()) cur = contract_edge(cur, internal_edges(cur).front());
            CHECK(cur == PlanarTree::corolla(k));
        }
}

TEST_CASE("pentagon incidence") {
    const auto binary = enumerate_trees(4, 0);
    const auto faces = enumerate_trees(4, 1);
    CHECK(binary.size() == 5);
    CHECK(faces.size() == 5);
    CHECK(enumerate_trees(4, 2).size() == 1);
    std::map<std::string, int> hits;
    std::size_t pairs = 0;
    for (const auto& t : binary) {
        const auto edges = internal_edges(t);
        CHECK(edges.size() == 2);
        for (const auto& e : edges) {
            ++hits[contract_edge(t, e).serialize()];
            ++pairs;
        }
    }
    CHECK(pairs == 10);
    CHECK(hits.size() == 5);
    for (const auto& [face, n] : hits) CHECK(n == 2);
}

TEST_CASE("grafting") {
    const auto t2 = PlanarTree::corolla(2);
    const auto bare = PlanarTree::leaf();
    const std::vector<PlanarTree> first{t2, bare};
    CHECK(graft(t2, first) == PlanarTree::left_comb(3));
    const std::vector<PlanarTree> both{t2, t2};
    CHECK(graft(t2, both) == PlanarTree::parse("((,),(,))"));
    const std::vector<PlanarTree> second{bare, PlanarTree::corolla(3)};
    const auto g = graft(t2, second);
    CHECK(g.ends() == 4);
    CHECK(g.stratum() == 1);
    const std::vector<PlanarTree> wrong{t2};
    CHECK_THROWS(graft(t2, wrong));
}

TEST_CASE("grafting is associative") {
    // (t o (s_i)) o (u_j) == t o (s_i o (u_j restricted))
    std::vector<PlanarTree> shapes{PlanarTree::leaf()};
    for (std::size_t k = 2; k <= 3; ++k)
        for (const auto& t : enumerate_trees(k)) shapes.push_back(t);
    for (std::size_t k = 2; k <= 3; ++k)
        for (const auto& t : enumerate_trees(k)) {
            std::vector<std::size_t> pick(k, 0);
            while (true) {
                std::vector<PlanarTree> s;
                std::size_t mid = 0;
                for (auto p : pick) {
                    s.push_back(shapes[p]);
                    mid += std::max<std::size_t>(1, shapes[p].ends());
                }
                if (mid <= 6) {
                    const auto ts = graft(t, s);
                    // second stage: a fixed pattern of shapes over the `mid` ends
                    std::vector<PlanarTree> u;
                    for (std::size_t i = 0; i < mid; ++i) u.push_back(i % 2 == 0 ? PlanarTree::leaf() : PlanarTree::corolla(2));
                    const auto lhs = graft(ts, u);
                    std::vector<PlanarTree> inner;
                    std::size_t offset = 0;
                    for (const auto& si : s) {
                        const std::size_t width = std::max<std::size_t>(1, si.ends());
                        if (si.is_leaf()) {
                            inner.push_back(u[offset]);
                        } else {
                            std::vector<PlanarTree> part(u.begin() + static_cast<std::ptrdiff_t>(offset),
                                                         u.begin() + static_cast<std::ptrdiff_t>(offset + width));
                            inner.push_back(graft(si, part));
                        }
                        offset += width;
                    }
                    CHECK(lhs == graft(t, inner));
                    std::size_t strata = t.stratum();
                    for (const auto& si : s)
                        if (!si.is_leaf()) strata += si.stratum();
                    CHECK(ts.stratum() == strata);
                }
                std::size_t i = pick.size();
                while (i > 0 && ++pick[i - 1] == shapes.size()) pick[--i] = 0;
                if (i == 0) break;
            }
        }
}

TEST_CASE("vertex order") {
    const auto balanced = PlanarTree::parse("((,),(,))");
    CHECK(vertex_order(balanced) == std::vector<VertexPath>{{}, {0}, {1}});
    const auto lc4 = PlanarTree::left_comb(4);
    CHECK(vertex_order(lc4) == std::vector<VertexPath>{{}, {0}, {0, 0}});
    CHECK(vertex_order(PlanarTree::corolla(2)) == std::vector<VertexPath>{{}});
    // depth beats horizontal position
    const auto t = PlanarTree::parse("((,(,)),(,))");
    CHECK(vertex_order(t) == std::vector<VertexPath>{{}, {0}, {1}, {0, 1}});
}

TEST_CASE("marked index sets") {
    const auto fib = FusionRing::rank_two(1, 1);
    const std::vector<Element> xxx{1, 1, 1};
    const auto s = marked_index_set(fib, PlanarTree::right_comb(3), xxx, 1);
    REQUIRE(s.size() == 2);
    CHECK(s[0].labels == std::vector<Element>{0});
    CHECK(s[1].labels == std::vector<Element>{1});
    CHECK(s.size() == static_cast<std::size_t>(nary_constant(fib, 1, xxx)));

    for (const auto& ring : {fib, FusionRing::rank_two(2, 3)})
        for (Element a = 0; a < 2; ++a)
            for (Element b = 0; b < 2; ++b)
                for (Element c = 0; c < 2; ++c) {
                    const std::vector<Element> ab{a, b};
                    CHECK(marked_index_set(ring, PlanarTree::corolla(2), ab, c).size() ==
                          static_cast<std::size_t>(ring.constant(c, a, b)));
                }

    const auto r21 = FusionRing::rank_two(2, 1);
    const std::vector<Element> xxxx{1, 1, 1, 1};
    std::int64_t expected = 0;
    for (Element c = 0; c < 2; ++c)
        for (Element b = 0; b < 2; ++b) expected += r21.constant(1, c, b) * r21.constant(c, 1, 1) * r21.constant(b, 1, 1);
    const auto bal = marked_index_set(r21, PlanarTree::parse("((,),(,))"), xxxx, 1);
    CHECK(bal.size() == static_cast<std::size_t>(expected));
    CHECK(bal.size() == static_cast<std::size_t>(nary_constant(r21, 1, xxxx)));

    CHECK_THROWS(marked_index_set(fib, PlanarTree::corolla(3), xxx, 1));
    CHECK_THROWS(marked_index_set(fib, PlanarTree::right_comb(3), std::vector<Element>{1, 1}, 1));
}

TEST_CASE("marked index set members are sorted, distinct and positioned") {
    const auto r = FusionRing::rank_two(2, 2);
    const std::vector<Element> xxxx{1, 1, 1, 1};
    for (const auto& t : enumerate_trees(4, 0)) {
        const auto s = marked_index_set(r, t, xxxx, 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s.position(s[i]) == i);
            if (i) CHECK(s[i - 1] < s[i]);
        }
        MarkedIndex absent{std::vector<Element>(2, 0), std::vector<std::int64_t>(3, 99)};
        CHECK_THROWS_AS(s.position(absent), std::out_of_range);
    }
}

TEST_CASE("markings") {
    const auto fib = FusionRing::rank_two(1, 1);
    const std::vector<Element> xxx{1, 1, 1};
    const auto ms = enumerate_markings(fib, PlanarTree::left_comb(3), xxx, 1);
    REQUIRE(ms.size() == 2);
    const TreeLayout layout(PlanarTree::left_comb(3));
    for (const auto& m : ms) {
        CHECK(m.labels[0] == 1);
        for (std::size_t v = 0; v < layout.vertices.size(); ++v)
            if (layout.vertices[v].end) CHECK(m.labels[v] == xxx[*layout.vertices[v].end]);
    }
}
