#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lplanar/embedding.hpp"
#include "lplanar/graph.hpp"

namespace lplanar {

class NotBiconnected : public GraphError {
public:
    explicit NotBiconnected(Vertex cut) : GraphError("graph is not biconnected"), cut_vertex(cut) {}
    Vertex cut_vertex;
};

class ReferenceEdgeMissing : public GraphError {
public:
    ReferenceEdgeMissing() : GraphError("reference edge (s,t) is missing") {}
};

enum class NodeKind { S, P, Q, R };
char kind_char(NodeKind k);

// Skeleton edge. Exactly one of: the virtual edge towards the parent (child == kNone),
// or an edge standing for child node `child` (a Q child for real edges).
struct SkeletonEdge {
    Vertex tail = kNone;
    Vertex head = kNone;
    int child = kNone;
    EdgeId real = kNone;  // set when the child is a Q node
    bool is_parent() const { return child == kNone; }
};

struct SpqrNode {
    NodeKind kind = NodeKind::Q;
    Vertex s = kNone;  // pertinent source
    Vertex t = kNone;  // pertinent sink
    int parent = kNone;
    std::vector<int> children;
    // Skeleton: vertices are ids of G. Q nodes carry only `real`.
    std::vector<Vertex> vertices;
    std::vector<SkeletonEdge> edges;
    int parent_edge = kNone;  // index into edges, kNone at the root
    EdgeId real = kNone;      // Q nodes only
    // R nodes: clockwise skeleton edge indices per skeleton vertex (indexed like vertices).
    std::vector<std::vector<int>> rotation;
    int local(Vertex v) const;
};

// Rooted at the node whose skeleton holds the reference edge (s,t); the Q node of
// (s,t) hangs below it like every other real edge. A single-edge graph gives one Q node.
class SpqrTree {
public:
    SpqrTree() = default;
    const std::vector<SpqrNode>& nodes() const { return nodes_; }
    const SpqrNode& node(int i) const { return nodes_[i]; }
    int size() const { return static_cast<int>(nodes_.size()); }
    int root() const { return root_; }
    int reference_q() const { return ref_q_; }
    // Q node of each edge of G.
    int q_of_edge(EdgeId e) const { return q_of_edge_[e]; }
    // Nodes in an order where children precede parents.
    std::vector<int> postorder() const;

private:
    friend SpqrTree build_spqr(const DirectedGraph& g, Vertex s, Vertex t);
    std::vector<SpqrNode> nodes_;
    std::vector<int> q_of_edge_;
    int root_ = kNone;
    int ref_q_ = kNone;
};

bool is_biconnected(const DirectedGraph& g, Vertex* cut = nullptr);

// g must be a biconnected st-graph with source s, sink t and (s,t) in E.
SpqrTree build_spqr(const DirectedGraph& g, Vertex s, Vertex t);
SpqrTree build_spqr(const DirectedGraph& g);

// Real edges of pert(node).
std::vector<EdgeId> pertinent_edges(const SpqrTree& tree, int node);
// pert(node) as a graph on the vertices it touches; `ids` receives the G id of each vertex
// and `edge_ids` the G id of each edge.
DirectedGraph pertinent_graph(const DirectedGraph& g, const SpqrTree& tree, int node,
                              std::vector<Vertex>* ids = nullptr, std::vector<EdgeId>* edge_ids = nullptr);

// Rotation (clockwise skeleton edge indices per skeleton vertex, indexed like
// node.vertices) of an R skeleton. The mirror is the reversal of every list.
std::vector<std::vector<int>> rigid_rotation(const SpqrNode& node);

// Embeddings of a skeleton as rotations over skeleton edge indices. R: the mirror pair;
// S and Q: one; P: one per choice of the rightmost child, remaining children in
// increasing order (reflections collapsed).
std::vector<std::vector<std::vector<int>>> skeleton_embeddings(const SpqrNode& node);

// Per-node embedding choices. Left to right means clockwise after the parent edge.
struct EmbeddingChoice {
    std::vector<std::vector<int>> order;  // P nodes: child skeleton edges left to right at s
    std::vector<char> mirror;             // R nodes: use the reversed rotation
    bool st_first = true;                 // S or R root: the source's list starts with (s,t)
};
EmbeddingChoice default_choice(const SpqrTree& tree);

// Plane embedding of g assembled from the skeletons; the outer face is the angle at s
// preceding its first successor.
PlaneEmbedding realize_embedding(const DirectedGraph& g, const SpqrTree& tree, const EmbeddingChoice& choice);

// Indented debug dump.
std::string to_debug_string(const DirectedGraph& g, const SpqrTree& tree);

// Runs f on a thread with a large stack (deep DFS on long paths).
void run_with_large_stack(const std::function<void()>& f);

}  // namespace lplanar
