#include <doctest.h>

#include "lplanar/io.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/planarity.hpp"
#include "lplanar/reduction.hpp"
#include "lplanar/spqr.hpp"

using namespace lplanar;

namespace {

int count_role(const GadgetGraph& g, VertexRole r) {
    int c = 0;
    for (auto x : g.vertex_role) c += x == r;
    return c;
}

HvInstance grid(int rows, int cols) {
    HvInstance inst;
    inst.name = "grid";
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) inst.vertex_names.push_back("p" + std::to_string(r) + "_" + std::to_string(c));
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) inst.edges.push_back({id(r, c), id(r, c + 1), HvLabel::H});
            if (r + 1 < rows) inst.edges.push_back({id(r, c), id(r + 1, c), HvLabel::V});
        }
    return inst;
}

}  // namespace

TEST_CASE("gadget data matches its checksums") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    REQUIRE(gadget_sources().size() == 3);
    for (const auto& s : gadget_sources()) CHECK_MESSAGE(fnv1a64(s.text) == s.checksum, s.name);
    CHECK_THROWS_AS(parse_gadget("gadget x\nv a hub\n"), ParseError);
    CHECK_THROWS_AS(parse_gadget("gadget x\nv a center\ne a b rim\n"), ParseError);
}

TEST_CASE("wheel gadget") {
    auto w = build_wheel();
    const auto& g = w.graph;
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 12);
    Vertex u = *g.vertex_by_label("u"), v = *g.vertex_by_label("v"), x = *g.vertex_by_label("w"),
           z = *g.vertex_by_label("z"), c = *g.vertex_by_label("c");
    CHECK(w.vertex_role[c] == VertexRole::Center);
    CHECK(w.vertex_role[v] == VertexRole::VPort);
    CHECK(w.vertex_role[z] == VertexRole::VPort);
    CHECK(w.vertex_role[u] == VertexRole::HPort);
    CHECK(w.vertex_role[x] == VertexRole::HPort);
    // without the four added edges, V-ports are sinks and H-ports sources
    for (Vertex p : {v, z}) {
        CHECK(g.out_degree(p) == 1);
        CHECK(g.has_edge(p, c));
    }
    for (Vertex p : {u, x}) {
        CHECK(g.in_degree(p) == 1);
        CHECK(g.has_edge(c, p));
    }
    int rim = 0;
    for (auto r : w.edge_role) rim += r == EdgeRole::Rim;
    CHECK(rim == 4);
    CHECK(is_planar(g));
    CHECK(is_biconnected(g));
}

TEST_CASE("edge gadgets") {
    auto vg = build_v_edge_gadget(), hg = build_h_edge_gadget();
    for (const auto* gd : {&vg, &hg}) {
        CHECK(is_planar(gd->graph));
        CHECK(count_role(*gd, VertexRole::Attach) == 2);
        auto a = gd->graph.vertex_by_label("u"), b = gd->graph.vertex_by_label("v");
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a != *b);
        CHECK(gd->vertex_role[*a] == VertexRole::Attach);
    }
    for (EdgeId e = 0; e < vg.graph.num_edges(); ++e)
        CHECK(hg.graph.has_edge(vg.graph.edge(e).head, vg.graph.edge(e).tail));
    CHECK(canonical_form(vg.graph) == canonical_form(hg.graph));
    // attachments are rim sinks in the V gadget and rim sources in the H gadget
    Vertex a = *vg.graph.vertex_by_label("u");
    CHECK(vg.graph.out_degree(a) == 1);
    CHECK(hg.graph.in_degree(a) == 1);
}

TEST_CASE("rectangle instance reduces to four wheels and four gadgets") {
    auto inst = parse_hv("hvgraph rect\ne a b H\ne b c V\ne c d H\ne d a V\n");
    auto red = reduce_hv(inst);
    const auto& g = red.result.graph;
    CHECK(g.num_vertices() == 4 * 5 + 4 * 3);
    CHECK(g.num_edges() == 4 * 12 + 4 * 12);
    CHECK(is_planar(g));
    CHECK(count_role(red.result, VertexRole::Center) == 4);
    CHECK(count_role(red.result, VertexRole::Attach) == 0);
    // each vertex uses one V-port and one H-port; a used port gains the four gadget edges
    int used = 0, unused = 0;
    for (Vertex x = 0; x < g.num_vertices(); ++x)
        if (red.result.vertex_role[x] == VertexRole::VPort || red.result.vertex_role[x] == VertexRole::HPort) {
            used += g.degree(x) == 8;
            unused += g.degree(x) == 4;
        }
    CHECK(used == 8);
    CHECK(unused == 8);
    auto roles = write_roles(red.result);
    CHECK(roles.find("v a.c center 0") != std::string::npos);
    CHECK(roles.find("e0.m internal 4") != std::string::npos);
    // not drawable, but still reducible
    auto flat = reduce_hv(parse_hv("hvgraph flat\ne a b H\ne b c H\ne c d H\ne d a H\n"));
    CHECK(flat.result.graph.num_vertices() == 32);
}

TEST_CASE("instance errors") {
    CHECK_THROWS_AS(reduce_hv(parse_hv("hvgraph k4\ne a b H\ne a c H\ne a d H\ne b c V\ne b d V\ne c d V\n")),
                    PortExhausted);
    std::string k5 = "hvgraph k5\n";
    const char* names = "abcde";
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            k5 += std::string("e ") + names[i] + " " + names[j] + ((i + j) % 2 ? " H\n" : " V\n");
    CHECK_THROWS_AS(reduce_hv(parse_hv(k5)), NotPlanar);
    std::string star = "hvgraph s\n";
    for (int i = 0; i < 5; ++i) star += "e h x" + std::to_string(i) + " H\n";
    CHECK_THROWS_AS(reduce_hv(parse_hv(star)), NotDegree4);
    CHECK_THROWS_AS(reduce_hv(parse_hv("hvgraph p\ne a b H\ne b c V\n")), NotBiconnected);
    CHECK_THROWS_AS(parse_hv("hvgraph p\ne a b X\n"), ParseError);
    CHECK_THROWS_AS(parse_hv("hvgraph p\ne a b H\ne b a V\n"), ParseError);
    CHECK_THROWS_AS(parse_hv("graph p\n"), ParseError);
}

TEST_CASE("hv format round trip and rotation order") {
    auto inst = parse_hv("hvgraph r\ne a b V\ne b c H\ne c d V\ne d a H\nrot a 3 0\n");
    REQUIRE(inst.rotation.size() == 4);
    CHECK(inst.rotation[0] == std::vector<int>{3, 0});
    auto back = parse_hv(write_hv(inst));
    CHECK(back.vertex_names == inst.vertex_names);
    CHECK(back.rotation == inst.rotation);
    REQUIRE(back.edges.size() == 4);
    CHECK(back.edges[1].label == HvLabel::H);
    CHECK_THROWS_AS(parse_hv("hvgraph r\ne a b V\nrot a 5\n"), ParseError);
}

TEST_CASE("output size is linear in the instance") {
    for (auto [r, c] : {std::pair{2, 2}, {2, 5}, {3, 3}, {4, 6}, {10, 10}}) {
        auto inst = grid(r, c);
        auto red = reduce_hv(inst);
        const long n = static_cast<long>(inst.vertex_names.size()), m = static_cast<long>(inst.edges.size());
        CHECK(red.result.graph.num_vertices() == 5 * n + 3 * m);
        CHECK(red.result.graph.num_edges() == 12 * n + 12 * m);
        if (n <= 36) CHECK(is_planar(red.result.graph));
    }
}

TEST_CASE("outer rim of every L-drawing of W is a rectangle") {
    auto w = build_wheel();
    auto rep = rim_rectangle_search(w);
    CHECK(rep.candidates == 14400);
    CHECK(rep.valid == 8);
    CHECK(rep.rim_outer == 8);
    CHECK(rep.non_rectangular == 0);
    auto ds = wheel_drawings();
    REQUIRE(ds.size() == 2);
    for (const auto& d : ds) {
        CHECK(validate_ldrawing(w.graph, d, false).ok());
        CHECK(check_rectangle_property(w, d));
    }
    // c moved outside: the rim is no longer a box around it, and the layout is not a valid drawing
    LDrawing bad = ds[0];
    bad.x[4] = 6;
    CHECK_FALSE(rim_traces_rectangle(w.graph, bad, {0, 1, 2, 3}, 4));
    CHECK_FALSE(validate_ldrawing(w.graph, bad, false).ok());
    CHECK_THROWS_AS(check_rectangle_property(w, bad), InvalidDrawing);
    LDrawing degenerate = ds[0];
    degenerate.y[4] = degenerate.y[0];
    CHECK_THROWS_AS(check_rectangle_property(w, degenerate), InvalidDrawing);
}
