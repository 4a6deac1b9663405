#include "lplanar/graph.hpp"

#include <algorithm>
#include <queue>

namespace lplanar {

DirectedGraph::DirectedGraph(int n, std::string name) : name_(std::move(name)) {
    for (int i = 0; i < n; ++i) add_vertex();
}

Vertex DirectedGraph::add_vertex(std::string label) {
    Vertex v = num_vertices();
    if (label.empty()) label = std::to_string(v);
    if (by_label_.count(label)) throw GraphError("duplicate vertex label '" + label + "'");
    by_label_.emplace(label, v);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return v;
}

EdgeId DirectedGraph::add_edge(Vertex u, Vertex v, bool augmented) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop at '" + labels_[u] + "'");
    if (index_.count(key(u, v))) throw GraphError("duplicate edge " + labels_[u] + " -> " + labels_[v]);
    EdgeId e = num_edges();
    edges_.push_back({u, v, augmented});
    out_[u].push_back(e);
    in_[v].push_back(e);
    index_.emplace(key(u, v), e);
    return e;
}

std::optional<EdgeId> DirectedGraph::find_edge(Vertex u, Vertex v) const {
    auto it = index_.find(key(u, v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Vertex> DirectedGraph::vertex_by_label(const std::string& s) const {
    auto it = by_label_.find(s);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

std::vector<Vertex> topological_order(const DirectedGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> indeg(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (EdgeId e : g.out_edges(v))
            if (--indeg[g.edge(e).head] == 0) ready.push(g.edge(e).head);
    }
    if (static_cast<int>(order.size()) != n) order.clear();
    return order;
}

StReport validate_st_graph(const DirectedGraph& g) {
    StReport r;
    const int n = g.num_vertices();
    if (n == 0) return r;
    r.acyclic = !topological_order(g).empty();
    int sources = 0, sinks = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) {
            ++sources;
            r.source = v;
        }
        if (g.out_degree(v) == 0) {
            ++sinks;
            r.sink = v;
        }
    }
    if (sources != 1) r.source.reset();
    if (sinks != 1) r.sink.reset();
    r.ok = r.acyclic && r.source && r.sink;
    return r;
}

DirectedGraph add_super_source(const DirectedGraph& g) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    Vertex s = *rep.source, t = *rep.sink;
    if (s == t || g.has_edge(s, t)) throw EdgeStPresent();
    DirectedGraph h(0, g.name());
    for (Vertex v = 0; v < g.num_vertices(); ++v) h.add_vertex(g.label(v));
    for (const Edge& e : g.edges()) h.add_edge(e.tail, e.head, e.augmented);
    std::string lbl = "s'";
    while (h.vertex_by_label(lbl)) lbl += "'";
    Vertex sp = h.add_vertex(lbl);
    h.add_edge(sp, s, true);
    h.add_edge(sp, t, true);
    return h;
}

Reachability::Reachability(const DirectedGraph& g) {
    const int n = g.num_vertices();
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    rows_.assign(words_ * n, 0);
    auto order = topological_order(g);
    if (order.empty() && n > 0) throw GraphError("reachability requires an acyclic graph");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        std::uint64_t* row = &rows_[static_cast<std::size_t>(v) * words_];
        row[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (EdgeId e : g.out_edges(v)) {
            const std::uint64_t* sub = &rows_[static_cast<std::size_t>(g.edge(e).head) * words_];
            for (std::size_t w = 0; w < words_; ++w) row[w] |= sub[w];
        }
    }
}

bool is_st_ordering(const DirectedGraph& g, const StOrdering& pi) {
    const int n = g.num_vertices();
    if (static_cast<int>(pi.size()) != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (int r : pi) {
        if (r < 1 || r > n || seen[r]) return false;
        seen[r] = 1;
    }
    for (const Edge& e : g.edges())
        if (pi[e.tail] >= pi[e.head]) return false;
    return true;
}

bool is_bitonic_list(const std::vector<Vertex>& succs, const StOrdering& pi) {
    std::size_t i = 1;
    while (i < succs.size() && pi[succs[i - 1]] < pi[succs[i]]) ++i;
    while (i < succs.size() && pi[succs[i - 1]] > pi[succs[i]]) ++i;
    return i >= succs.size();
}

bool is_monotone_decreasing_list(const std::vector<Vertex>& succs, const StOrdering& pi) {
    for (std::size_t i = 1; i < succs.size(); ++i)
        if (pi[succs[i - 1]] <= pi[succs[i]]) return false;
    return true;
}

}  // namespace lplanar
