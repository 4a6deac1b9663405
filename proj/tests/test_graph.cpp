#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "lplanar/embedding.hpp"
#include "lplanar/io.hpp"
#include "lplanar/planarity.hpp"

using namespace lplanar;
using namespace lplanar::testing;

TEST_CASE("validate_st_graph reports") {
    auto r = validate_st_graph(make_graph(2, {{0, 1}}));
    CHECK(r.ok);
    CHECK(*r.source == 0);
    CHECK(*r.sink == 1);

    auto c = validate_st_graph(make_graph(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.acyclic);

    auto d = validate_st_graph(diamond());
    CHECK(d.ok);
    CHECK(*d.source == 0);
    CHECK(*d.sink == 3);

    auto two_sinks = validate_st_graph(make_graph(3, {{0, 1}, {0, 2}}));
    CHECK_FALSE(two_sinks.ok);
    CHECK_FALSE(two_sinks.sink.has_value());

    auto single = validate_st_graph(DirectedGraph(1));
    CHECK(single.ok);
    CHECK(*single.source == *single.sink);
}

TEST_CASE("simple graph model rejects loops and duplicates") {
    DirectedGraph g(2);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_NOTHROW(g.add_edge(1, 0));
}

TEST_CASE("planar_embed on K4 and K5") {
    auto k = k4();
    auto emb = planar_embed(k);
    CHECK(emb.num_faces() == 4);
    CHECK(emb.satisfies_euler());

    DirectedGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    try {
        planar_embed(k5);
        FAIL("K5 embedded");
    } catch (const NotPlanar& np) {
        CHECK(np.witness.size() == 10);
    }
}

TEST_CASE("diamond has two faces") {
    auto emb = planar_embed(diamond());
    CHECK(emb.num_faces() == 2);
    CHECK(emb.satisfies_euler());
}

TEST_CASE("antiparallel pairs embed as 2-gons") {
    auto g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
    auto emb = planar_embed(g);
    CHECK(emb.satisfies_euler());
    CHECK(emb.num_faces() == 3);
}

TEST_CASE("embed_upward places s and t on the outer face") {
    for (auto g : {diamond(), k4(), octahedron(), make_graph(2, {{0, 1}})}) {
        auto emb = embed_upward(g);
        CHECK(is_upward_embedding(g, emb));
    }
}

TEST_CASE("successor lists") {
    auto g = diamond();
    auto emb = embedding_from_successor_lists(g, {{1, 2}, {3}, {3}, {}});
    CHECK(successor_list(g, emb, 0) == std::vector<Vertex>{1, 2});
    CHECK(successor_list(g, emb, 3).empty());
    auto other = embedding_from_successor_lists(g, {{2, 1}, {3}, {3}, {}});
    CHECK(successor_list(g, other, 0) == std::vector<Vertex>{2, 1});
    // Mirror reverses every list.
    auto mir = emb.mirrored();
    CHECK(successor_list(g, mir, 0) == std::vector<Vertex>{2, 1});
}

TEST_CASE("successor lists rebuild the embedding") {
    auto g = octahedron();
    auto emb = embed_upward(g);
    std::vector<std::vector<Vertex>> lists;
    for (Vertex v = 0; v < g.num_vertices(); ++v) lists.push_back(successor_list(g, emb, v));
    auto again = embedding_from_successor_lists(g, lists);
    CHECK(is_upward_embedding(g, again));
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(successor_list(g, again, v) == lists[v]);
}

TEST_CASE("non-realizable successor lists are rejected") {
    auto g = octahedron();
    auto emb = embed_upward(g);
    std::vector<std::vector<Vertex>> lists;
    for (Vertex v = 0; v < g.num_vertices(); ++v) lists.push_back(successor_list(g, emb, v));
    std::swap(lists[0][0], lists[0][1]);
    CHECK_THROWS(embedding_from_successor_lists(g, lists));
}

TEST_CASE("is_bitonic_list and is_monotone_decreasing_list") {
    StOrdering pi = {0, 1, 2, 3, 4, 5};  // identity ranks by vertex id
    CHECK(is_bitonic_list({}, pi));
    CHECK(is_bitonic_list({3}, pi));
    CHECK(is_bitonic_list({2, 5, 4, 1}, pi));
    CHECK_FALSE(is_bitonic_list({3, 1, 4}, pi));
    CHECK(is_monotone_decreasing_list({}, pi));
    CHECK(is_monotone_decreasing_list({5, 3, 2}, pi));
    CHECK_FALSE(is_monotone_decreasing_list({2, 5}, pi));
}

TEST_CASE("bitonic list agrees with split-point scan") {
    // All sequences over ranks 1..5 of length up to 5, no repetition.
    std::vector<int> r = {1, 2, 3, 4, 5};
    StOrdering pi = {0, 1, 2, 3, 4, 5};
    for (int len = 0; len <= 5; ++len) {
        std::vector<int> base(r.begin(), r.begin() + len);
        do {
            bool scan = false;
            for (int h = 0; h <= len && !scan; ++h) {
                bool ok = true;
                for (int i = 1; i < h; ++i) ok = ok && base[i - 1] < base[i];
                for (int i = std::max(h, 1); i < len; ++i) ok = ok && base[i - 1] > base[i];
                scan = ok;
            }
            std::vector<Vertex> l(base.begin(), base.end());
            CHECK(is_bitonic_list(l, pi) == scan);
            if (is_monotone_decreasing_list(l, pi)) CHECK(is_bitonic_list(l, pi));
        } while (std::next_permutation(base.begin(), base.end()));
    }
}

TEST_CASE("modality") {
    auto g = alternating_wheel6();
    auto emb = planar_embed(g);
    CHECK(modality(g, emb, 0) == 6);
    CHECK(modality(g, emb.mirrored(), 0) == 6);
    auto d = diamond();
    auto de = embed_upward(d);
    CHECK(modality(d, de, 0) == 0);
    CHECK(modality(d, de, 1) == 2);
}

TEST_CASE("add_super_source") {
    auto h = add_super_source(diamond());
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 6);
    auto r = validate_st_graph(h);
    CHECK(r.ok);
    CHECK(*r.source == 4);
    CHECK(*r.sink == 3);
    CHECK_THROWS_AS(add_super_source(make_graph(2, {{0, 1}})), EdgeStPresent);
}

TEST_CASE("graph text format") {
    auto gf = parse_graph("digraph d\ns -> a\ns -> b\na -> t\nb -> t\norder: s b a\n");
    CHECK(gf.graph.num_vertices() == 4);
    CHECK(gf.graph.num_edges() == 4);
    REQUIRE(gf.orders.size() == 1);
    CHECK(gf.orders[0].second == std::vector<Vertex>{2, 1});
    CHECK(parse_graph(write_graph(gf.graph)).graph.num_edges() == 4);
    try {
        parse_graph("digraph d\na -> b\na -> b\n");
        FAIL("duplicate accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    try {
        parse_graph("digraph d\na -> b\n\nb -> b\n");
        FAIL("self-loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("embedding text format round trip") {
    auto g = octahedron();
    auto emb = embed_upward(g);
    auto back = parse_embedding(g, write_embedding(g, emb));
    CHECK(back.rotations() == emb.rotations());
    CHECK(back.outer_face() == emb.outer_face());
}
