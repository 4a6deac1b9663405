#pragma once

#include <vector>

namespace lplanar::detail {

enum class CompType { Bond, Polygon, Triconnected };

struct SplitEdge {
    int u, v;
    int real;  // original edge id, or -1 for a virtual edge
};

struct SplitComponent {
    CompType type;
    std::vector<int> edges;  // indices into TriconnectedComponents::edges
};

struct TriconnectedComponents {
    std::vector<SplitEdge> edges;
    std::vector<SplitComponent> components;
};

// Hopcroft-Tarjan path search with the Gutwenger-Mutzel corrections. Input: a simple
// biconnected undirected graph on n >= 3 vertices given by its edge list.
TriconnectedComponents triconnected_components(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace lplanar::detail
