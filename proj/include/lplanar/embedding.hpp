#pragma once

#include <vector>

#include "lplanar/graph.hpp"

namespace lplanar {

// Dart 2e runs tail->head, dart 2e+1 runs head->tail.
using Dart = int;
inline Dart dart_of(EdgeId e, bool forward) { return 2 * e + (forward ? 0 : 1); }
inline EdgeId dart_edge(Dart d) { return d >> 1; }
inline Dart dart_twin(Dart d) { return d ^ 1; }

class NotBimodalAtVertex : public GraphError {
public:
    explicit NotBimodalAtVertex(Vertex v) : GraphError("outgoing edges not contiguous at vertex " + std::to_string(v)), vertex(v) {}
    Vertex vertex;
};

class EmbeddingInvalid : public GraphError {
public:
    using GraphError::GraphError;
};

// Rotation system (clockwise edge order at each vertex) plus an outer face.
// Face f is traced by the rule: after arriving at v along edge rot[v][i],
// leave along rot[v][i+1]. Angle (v,i) lies between rot[v][i] and rot[v][i+1].
class PlaneEmbedding {
public:
    PlaneEmbedding() = default;
    PlaneEmbedding(const DirectedGraph& g, std::vector<std::vector<EdgeId>> rotation);

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return static_cast<int>(ends_.size()); }
    const std::vector<EdgeId>& rotation(Vertex v) const { return rot_[v]; }
    const std::vector<std::vector<EdgeId>>& rotations() const { return rot_; }

    Vertex dart_origin(Dart d) const { return (d & 1) ? ends_[d >> 1].head : ends_[d >> 1].tail; }
    Vertex dart_target(Dart d) const { return (d & 1) ? ends_[d >> 1].tail : ends_[d >> 1].head; }
    Dart next_dart(Dart d) const;

    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::vector<Dart>& face(int f) const { return faces_[f]; }
    int face_of_dart(Dart d) const { return face_of_dart_[d]; }
    // Face containing angle (v,i).
    int face_of_angle(Vertex v, int i) const;
    // Position of edge e in rot[v].
    int position(Vertex v, EdgeId e) const;

    int outer_face() const { return outer_; }
    void set_outer_face(int f);
    // First angle index at v that lies on face f, or -1.
    int angle_on_face(Vertex v, int f) const;

    // Euler characteristic check, per connected component.
    bool satisfies_euler() const;

    PlaneEmbedding mirrored() const;

private:
    void trace_faces();
    std::vector<Edge> ends_;
    std::vector<std::vector<EdgeId>> rot_;
    std::vector<int> pos_tail_, pos_head_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<int> face_of_dart_;
    int outer_ = 0;
};

// Successors of v left to right: the clockwise run of outgoing edges starting after the
// incoming block (or, at a source, after its outer-face angle).
std::vector<Vertex> successor_list(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v);
std::vector<EdgeId> successor_edges(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v);

// Number of in/out alternations in the cyclic rotation at v.
int modality(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v);
int max_modality(const DirectedGraph& g, const PlaneEmbedding& emb);

// Rotation describes a planar embedding of this graph: each edge placed once at both ends, Euler holds.
bool is_valid_embedding(const DirectedGraph& g, const PlaneEmbedding& emb);

// s and t both on the outer face and every vertex bimodal.
bool is_upward_embedding(const DirectedGraph& g, const PlaneEmbedding& emb);

// Upward embedding determined by left-to-right successor lists, lists[v] for every vertex.
PlaneEmbedding embedding_from_successor_lists(const DirectedGraph& g, const std::vector<std::vector<Vertex>>& lists);

}  // namespace lplanar
