#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lplanar {

using Vertex = int;
using EdgeId = int;
inline constexpr int kNone = -1;

struct Edge {
    Vertex tail = kNone;
    Vertex head = kNone;
    bool augmented = false;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple digraph with dense, stable vertex and edge ids.
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(int n, std::string name = "g");

    Vertex add_vertex(std::string label = {});
    EdgeId add_edge(Vertex u, Vertex v, bool augmented = false);

    int num_vertices() const { return static_cast<int>(out_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeId>& out_edges(Vertex v) const { return out_[v]; }
    const std::vector<EdgeId>& in_edges(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }
    Vertex other(EdgeId e, Vertex v) const { return edges_[e].tail == v ? edges_[e].head : edges_[e].tail; }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    const std::string& label(Vertex v) const { return labels_[v]; }
    std::optional<Vertex> vertex_by_label(const std::string& s) const;
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    static std::uint64_t key(Vertex u, Vertex v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }
    std::string name_ = "g";
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_, in_;
    std::vector<std::string> labels_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
    std::unordered_map<std::string, Vertex> by_label_;
};

struct StReport {
    bool acyclic = false;
    std::optional<Vertex> source;
    std::optional<Vertex> sink;
    bool ok = false;
};

StReport validate_st_graph(const DirectedGraph& g);

// Kahn order with smallest-id tie-breaking; empty if cyclic (and n > 0).
std::vector<Vertex> topological_order(const DirectedGraph& g);

// Thrown by add_super_source when (s,t) already exists.
class EdgeStPresent : public GraphError {
public:
    EdgeStPresent() : GraphError("edge (s,t) already present") {}
};

class NotStGraph : public GraphError {
public:
    NotStGraph() : GraphError("input is not an st-graph") {}
};

// G' = G + s' + (s',s) + (s',t). The new source is the last vertex.
DirectedGraph add_super_source(const DirectedGraph& g);

// Bit-matrix reachability (u reaches v, reflexive). Intended for small or medium graphs.
class Reachability {
public:
    explicit Reachability(const DirectedGraph& g);
    bool reaches(Vertex u, Vertex v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

private:
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Rank vector: pi[v] in 1..n.
using StOrdering = std::vector<int>;

bool is_st_ordering(const DirectedGraph& g, const StOrdering& pi);
bool is_bitonic_list(const std::vector<Vertex>& succs, const StOrdering& pi);
bool is_monotone_decreasing_list(const std::vector<Vertex>& succs, const StOrdering& pi);

}  // namespace lplanar
