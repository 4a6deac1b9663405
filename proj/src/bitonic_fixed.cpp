#include <queue>

#include "lplanar/bitonic.hpp"

namespace lplanar {

FixedTestResult test_bitonic_fixed(const DirectedGraph& g, const PlaneEmbedding& emb, Mode mode) {
    if (!is_upward_embedding(g, emb)) throw NotPlaneStGraph();
    const int n = g.num_vertices();
    std::vector<std::vector<Vertex>> succ(n);
    std::vector<int> lo(n), hi(n);
    // slot[e]: index of head(e) in the successor list of tail(e)
    std::vector<int> slot(g.num_edges());
    for (Vertex v = 0; v < n; ++v) {
        auto es = successor_edges(g, emb, v);
        for (int i = 0; i < static_cast<int>(es.size()); ++i) {
            slot[es[i]] = i;
            succ[v].push_back(g.edge(es[i]).head);
        }
        lo[v] = 0;
        hi[v] = static_cast<int>(es.size()) - 1;
    }
    const bool mono = mode == Mode::Monotone;
    std::vector<int> placed_preds(n, 0), ends(n, 0);
    std::vector<char> placed(n, 0);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    auto eligible = [&](Vertex w) { return placed_preds[w] == g.in_degree(w) && ends[w] == g.in_degree(w); };
    auto bump = [&](Vertex w) {
        if (++ends[w] == g.in_degree(w) && placed_preds[w] == g.in_degree(w)) ready.push(w);
    };

    FixedTestResult res;
    res.pi.assign(n, 0);
    int rank = 0;
    for (Vertex v = 0; v < n; ++v)
        if (g.in_degree(v) == 0) ready.push(v);
    while (!ready.empty()) {
        Vertex x = ready.top();
        ready.pop();
        if (placed[x] || !eligible(x)) continue;
        placed[x] = 1;
        res.pi[x] = ++rank;
        // Shrink the windows of x's predecessors.
        for (EdgeId e : g.in_edges(x)) {
            Vertex p = g.edge(e).tail;
            int i = slot[e];
            if (i == hi[p]) {
                --hi[p];
                if (hi[p] >= lo[p] && (mono || hi[p] != lo[p])) bump(succ[p][hi[p]]);
            } else {
                ++lo[p];
                if (lo[p] < hi[p]) bump(succ[p][lo[p]]);
            }
        }
        // Open x's own window.
        for (Vertex w : succ[x]) ++placed_preds[w];
        if (!succ[x].empty()) {
            bump(succ[x][hi[x]]);
            if (!mono && lo[x] != hi[x]) bump(succ[x][lo[x]]);
        }
        for (Vertex w : succ[x])
            if (eligible(w)) ready.push(w);
    }
    if (rank == n) {
        res.accepted = true;
        augment_with_ordering(g, emb, res.pi, &res.added_edges);
        return res;
    }
    res.pi.clear();
    for (Vertex w = 0; w < n && res.witness == kNone; ++w) {
        if (placed[w] || placed_preds[w] != g.in_degree(w)) continue;
        for (EdgeId e : g.in_edges(w)) {
            Vertex p = g.edge(e).tail;
            bool at_end = slot[e] == hi[p] || (!mono && slot[e] == lo[p]);
            if (!at_end) {
                res.witness = p;
                break;
            }
        }
    }
    return res;
}

DirectedGraph augment_with_ordering(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi,
                                    std::vector<std::pair<Vertex, Vertex>>* added) {
    DirectedGraph h = g;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto s = successor_list(g, emb, v);
        for (std::size_t i = 1; i < s.size(); ++i) {
            Vertex a = s[i - 1], b = s[i];
            if (pi[a] > pi[b]) std::swap(a, b);
            if (h.has_edge(a, b)) continue;
            h.add_edge(a, b, true);
            if (added) added->emplace_back(a, b);
        }
    }
    return h;
}

bool is_valid_pair(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi, Mode mode) {
    if (!is_st_ordering(g, pi) || !is_upward_embedding(g, emb)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto s = successor_list(g, emb, v);
        bool ok = mode == Mode::Bitonic ? is_bitonic_list(s, pi) : is_monotone_decreasing_list(s, pi);
        if (!ok) return false;
    }
    return true;
}

}  // namespace lplanar
