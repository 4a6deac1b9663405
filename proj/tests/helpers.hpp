#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "lplanar/graph.hpp"

namespace lplanar::testing {

inline DirectedGraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    DirectedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

template <class Range>
DirectedGraph make_graph_from(int n, const Range& edges) {
    DirectedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// s=0, a=1, b=2, t=3
inline DirectedGraph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// K4 as st-graph: 0 -> 1 -> 2 -> 3 plus all chords forward.
inline DirectedGraph k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Octahedron K_{2,2,2} oriented by vertex id; non-adjacent pairs (0,3), (1,4), (2,5).
// Admits a bitonic pair but no monotone one.
inline DirectedGraph octahedron() {
    DirectedGraph g(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!((i == 0 && j == 3) || (i == 1 && j == 4) || (i == 2 && j == 5))) g.add_edge(i, j);
    return g;
}

// Hub 0 with rim 1..6; spokes alternate direction, rim oriented to keep the graph acyclic.
inline DirectedGraph alternating_wheel6() {
    return make_graph(7, {{0, 1}, {2, 0}, {0, 3}, {4, 0}, {0, 5}, {6, 0},
                          {2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 1}});
}

// Series chain of graphs; each block's source is glued to the previous block's sink.
inline DirectedGraph series_chain(const std::vector<DirectedGraph>& blocks) {
    DirectedGraph g(1);
    Vertex base = 0;
    for (const auto& b : blocks) {
        std::vector<Vertex> id(b.num_vertices());
        id[0] = base;
        for (int v = 1; v < b.num_vertices(); ++v) id[v] = g.add_vertex();
        for (const Edge& e : b.edges()) g.add_edge(id[e.tail], id[e.head]);
        base = id[b.num_vertices() - 1];
    }
    return g;
}

}  // namespace lplanar::testing
