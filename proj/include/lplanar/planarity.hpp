#pragma once

#include <vector>

#include "lplanar/embedding.hpp"

namespace lplanar {

class NotPlanar : public GraphError {
public:
    explicit NotPlanar(std::vector<EdgeId> w) : GraphError("graph is not planar"), witness(std::move(w)) {}
    std::vector<EdgeId> witness;  // edges of a Kuratowski subdivision
};

class NoUpwardEmbedding : public GraphError {
public:
    NoUpwardEmbedding() : GraphError("no planar embedding with s and t on a common face") {}
};

bool is_planar(const DirectedGraph& g);

// Some planar embedding (antiparallel pairs share a 2-gon face); outer face is face 0.
PlaneEmbedding planar_embed(const DirectedGraph& g);

// Planar embedding with source and sink on the outer face.
PlaneEmbedding embed_upward(const DirectedGraph& g);

}  // namespace lplanar
