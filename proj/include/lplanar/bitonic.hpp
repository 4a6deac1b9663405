#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lplanar/embedding.hpp"

namespace lplanar {

enum class Mode { Bitonic, Monotone };

class NotPlaneStGraph : public GraphError {
public:
    NotPlaneStGraph() : GraphError("input is not a plane st-graph with an upward embedding") {}
};

struct FixedTestResult {
    bool accepted = false;
    StOrdering pi;                 // valid when accepted
    std::vector<std::pair<Vertex, Vertex>> added_edges;  // G* minus G
    Vertex witness = kNone;        // vertex whose successor list admits no valid split
};

// Fixed-embedding test. Places vertices in rank order; a vertex may be placed once all its
// predecessors are placed and it sits at an end of each predecessor's remaining window
// (the right end only, for Mode::Monotone).
FixedTestResult test_bitonic_fixed(const DirectedGraph& g, const PlaneEmbedding& emb, Mode mode = Mode::Bitonic);

// G plus one edge between every pair of consecutive successors, oriented by pi.
DirectedGraph augment_with_ordering(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi,
                                    std::vector<std::pair<Vertex, Vertex>>* added = nullptr);

// Every successor list passes the mode's predicate.
bool is_valid_pair(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi, Mode mode);

}  // namespace lplanar
