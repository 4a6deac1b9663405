#include <doctest.h>


#include "helpers.hpp"
#include "lplanar/io.hpp"
#include "lplanar/ldraw.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/planarity.hpp"
#include "lplanar/portcheck.hpp"
#include "lplanar/variable.hpp"

using namespace lplanar;
using namespace lplanar::testing;


TEST_CASE("single edge with top and left ports") {
    auto g = make_graph(2, {{0, 1}});
    PlaneEmbedding emb(g, {{0}, {0}});
    PortLabeling l{{Port::Top}, {Port::Left}};
    auto r = check_port_feasibility(g, emb, l);
    REQUIRE(r.feasible);
    CHECK(r.witness.convex_face.size() == 1);
    CHECK(witness_to_partial_drawing_check(g, emb, l, r.witness));
    CHECK(r.witness.angle[0] == std::vector<int>{4});
}

TEST_CASE("interleaved port blocks are rejected") {
    // top out-edges 0->1, 0->2 alternate with right-port in-edges 3->0, 4->0
    auto g = make_graph(5, {{0, 1}, {0, 2}, {3, 0}, {4, 0}});
    PlaneEmbedding emb(g, {{0, 2, 1, 3}, {0}, {1}, {2}, {3}});
    PortLabeling l{{Port::Top, Port::Top, Port::Top, Port::Top}, {Port::Left, Port::Left, Port::Right, Port::Right}};
    auto r = check_port_feasibility(g, emb, l);
    CHECK_FALSE(r.feasible);
    CHECK(r.reason == PortFailure::CyclicOrder);
    CHECK(r.vertex == 0);
}

TEST_CASE("perturbed witnesses fail the re-check") {
    auto g = diamond();
    auto r = test_bitonic_variable(g);
    REQUIRE(r.accepted);
    auto d = construct_upward_ldrawing(g, r.embedding, r.pi);
    auto emb = drawing_embedding(g, d);
    auto l = labeling_of(g, d);
    auto res = check_port_feasibility(g, emb, l);
    REQUIRE(res.feasible);
    REQUIRE(witness_to_partial_drawing_check(g, emb, l, res.witness));
    bool any = false;
    for (Vertex v = 0; v < g.num_vertices() && !any; ++v)
        for (std::size_t i = 0; i < res.witness.angle[v].size(); ++i) {
            auto w = res.witness;
            w.angle[v][i] = (w.angle[v][i] + 2) % 6;
            CHECK_FALSE(witness_to_partial_drawing_check(g, emb, l, w));
            any = true;
        }
    CHECK(any);
}

TEST_CASE("bend-or-end needs an owner at zero angles") {
    // two edges out of the top of 0, both bending left: the inner one must take its bend
    auto g = make_graph(3, {{0, 1}, {0, 2}});
    LDrawing d{"fan", {3, 1, 2}, {1, 3, 2}};
    REQUIRE(validate_ldrawing(g, d, false).ok());
    auto emb = drawing_embedding(g, d);
    auto l = labeling_of(g, d);
    auto r = check_port_feasibility(g, emb, l);
    REQUIRE(r.feasible);
    auto w = r.witness;
    w.owner.assign(2, kNone);
    CHECK_FALSE(witness_to_partial_drawing_check(g, emb, l, w));
}

TEST_CASE("label file round trip") {
    GraphFile gf = parse_graph("digraph t\na -> b\nb -> c\n");
    PortLabeling l{{Port::Bottom, Port::Top}, {Port::Right, Port::Left}};
    auto back = parse_labels(gf.graph, write_labels(gf.graph, l));
    CHECK(back.out == l.out);
    CHECK(back.in == l.in);
    CHECK_THROWS_AS(parse_labels(gf.graph, "e a b out=top in=left\n"), ParseError);
    CHECK_THROWS_AS(parse_labels(gf.graph, "e a b out=left in=left\ne b c out=top in=left\n"), ParseError);
}

TEST_CASE("exhaustive agreement on small plane digraphs") {
    long total = 0, feasible = 0, bad = 0;
    for (int n = 2; n <= 4; ++n)
        for_each_connected_planar_digraph(n, 8, [&](const DirectedGraph& g) {
            auto geo = realized_port_labelings(g);
            const int m = g.num_edges();
            enumerate_plane_embeddings(g, [&](const PlaneEmbedding& emb) {
                auto key = embedding_key(emb);
                for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * m)); ++code) {
                    auto l = labeling_from_code(m, code);
                    auto r = check_port_feasibility(g, emb, l);
                    ++total;
                    feasible += r.feasible;
                    if (r.feasible != brute_force_port_feasibility(g, emb, l)) ++bad;
                    if (r.feasible != (geo.count({key, code}) > 0)) ++bad;
                    if (r.feasible && !witness_to_partial_drawing_check(g, emb, l, r.witness)) ++bad;
                }
                return true;
            });
        });
    CHECK(total > 200000);
    CHECK(feasible > 1000);
    CHECK(bad == 0);
}

TEST_CASE("labels read off constructed drawings are feasible") {
    int bad = 0, seen = 0;
    for (int n = 2; n <= 6; ++n)
        for_each_small_st_graph(n, [&](const DirectedGraph& g) {
            auto r = test_bitonic_variable(g);
            if (!r.accepted) return;
            auto d = construct_upward_ldrawing(g, r.embedding, r.pi);
            ++seen;
            if (!check_port_feasibility(g, drawing_embedding(g, d), labeling_of(g, d)).feasible) ++bad;
        });
    CHECK(seen > 2000);
    CHECK(bad == 0);
}
