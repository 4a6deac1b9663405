#pragma once

#include <doctest.h>

#include <algorithm>
#include <set>

#include "lplanar/spqr.hpp"

namespace lplanar::testing {

// Connectivity of skeleton `nd` after deleting vertex positions a and b (-1 = none).
inline bool skeleton_connected_without(const SpqrNode& nd, Vertex a, Vertex b) {
    std::vector<Vertex> vs;
    for (Vertex v : nd.vertices)
        if (v != a && v != b) vs.push_back(v);
    if (vs.size() <= 1) return true;
    std::set<Vertex> seen{vs[0]};
    std::vector<Vertex> stack{vs[0]};
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (const auto& se : nd.edges) {
            Vertex y = se.tail == x ? se.head : se.head == x ? se.tail : kNone;
            if (y == kNone || y == a || y == b || seen.count(y)) continue;
            seen.insert(y);
            stack.push_back(y);
        }
    }
    return seen.size() == vs.size();
}

// Structural invariants of a rooted canonical SPQR tree of g with reference edge (s,t).
inline void check_spqr_invariants(const DirectedGraph& g, const SpqrTree& tree, Vertex s, Vertex t) {
    const auto& root = tree.node(tree.root());
    CHECK(root.s == s);
    CHECK(root.t == t);
    CHECK(root.parent == kNone);
    REQUIRE(tree.reference_q() != kNone);
    CHECK(tree.node(tree.reference_q()).real == *g.find_edge(s, t));

    std::vector<int> seen_edge(g.num_edges(), 0);
    std::size_t skeleton_size = 0;
    for (int i = 0; i < tree.size(); ++i) {
        const auto& nd = tree.node(i);
        if (nd.kind == NodeKind::Q) {
            REQUIRE(nd.real != kNone);
            ++seen_edge[nd.real];
            CHECK(nd.children.empty());
            CHECK(g.edge(nd.real).tail == nd.s);
            CHECK(g.edge(nd.real).head == nd.t);
            continue;
        }
        skeleton_size += nd.vertices.size() + nd.edges.size();
        // links
        for (const auto& se : nd.edges) {
            if (se.is_parent()) {
                CHECK(se.tail == nd.s);
                CHECK(se.head == nd.t);
                continue;
            }
            const auto& ch = tree.node(se.child);
            CHECK(ch.parent == i);
            CHECK(ch.s == se.tail);
            CHECK(ch.t == se.head);
            if (ch.kind == NodeKind::Q) CHECK(se.real == ch.real);
            if (nd.kind == NodeKind::S || nd.kind == NodeKind::P) CHECK(ch.kind != nd.kind);
        }
        CHECK((nd.parent_edge == kNone) == (i == tree.root()));
        // skeleton shapes
        if (nd.kind == NodeKind::P) {
            CHECK(nd.vertices.size() == 2);
            CHECK(nd.edges.size() >= 3);
        } else if (nd.kind == NodeKind::S) {
            CHECK(nd.edges.size() == nd.vertices.size());
            CHECK(nd.vertices.size() >= 3);
            for (Vertex v : nd.vertices) {
                int d = 0;
                for (const auto& se : nd.edges) d += (se.tail == v) + (se.head == v);
                CHECK(d == 2);
            }
            CHECK(skeleton_connected_without(nd, kNone, kNone));
        } else {
            CHECK(nd.vertices.size() >= 4);
            std::set<std::pair<Vertex, Vertex>> pairs;
            for (const auto& se : nd.edges) pairs.insert(std::minmax(se.tail, se.head));
            CHECK(pairs.size() == nd.edges.size());
            for (std::size_t a = 0; a < nd.vertices.size(); ++a)
                for (std::size_t b = a + 1; b < nd.vertices.size(); ++b)
                    CHECK(skeleton_connected_without(nd, nd.vertices[a], nd.vertices[b]));
        }
        // pertinent graph is an st-graph between the poles
        std::vector<Vertex> ids;
        auto pg = pertinent_graph(g, tree, i, &ids);
        auto rep = validate_st_graph(pg);
        CHECK(rep.ok);
        if (rep.ok) {
            CHECK(ids[*rep.source] == nd.s);
            CHECK(ids[*rep.sink] == nd.t);
        }
    }
    for (int c : seen_edge) CHECK(c == 1);
    CHECK(skeleton_size <= 6 * static_cast<std::size_t>(g.num_vertices() + g.num_edges()));
}

}  // namespace lplanar::testing
