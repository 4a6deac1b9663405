#include "lplanar/ldraw.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/portcheck.hpp"

#include <algorithm>
#include <numeric>

namespace lplanar {

std::optional<LDrawing> brute_force_upward_ldrawing(const DirectedGraph& g, bool rightward,
                                                    const EnumerationBudget& budget) {
    const int n = g.num_vertices(), m = g.num_edges();
    if (n > budget.max_vertices || m > budget.max_edges) throw BudgetExceeded("graph too large for drawing search");
    std::optional<LDrawing> found;
    LDrawing d;
    d.name = g.name();
    d.x.assign(n, 0);
    std::vector<bool> placed(n);
    // Horizontal of e against vertical of f; known once both ends of e and the tail of f have x.
    auto crosses = [&](EdgeId e, EdgeId f) {
        const Edge& a = g.edge(e);
        const Edge& b = g.edge(f);
        int lo = std::min(d.x[a.tail], d.x[a.head]), hi = std::max(d.x[a.tail], d.x[a.head]);
        int xv = d.x[b.tail], y = d.y[a.head];
        return lo < xv && xv < hi && d.y[b.tail] < y && y < d.y[b.head];
    };
    auto ready = [&](EdgeId e) { return placed[g.edge(e).tail] && placed[g.edge(e).head]; };
    std::function<bool(int)> place = [&](int k) {
        if (k == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (placed[w]) continue;
            if (rightward) {
                bool preds = true;
                for (EdgeId e : g.in_edges(w)) preds = preds && placed[g.edge(e).tail];
                if (!preds) continue;
            }
            placed[w] = true;
            d.x[w] = k + 1;
            bool ok = true;
            for (EdgeId e = 0; e < m && ok; ++e) {
                if (!ready(e)) continue;
                bool e_new = g.edge(e).tail == w || g.edge(e).head == w;
                for (EdgeId f = 0; f < m && ok; ++f) {
                    if (f == e || !placed[g.edge(f).tail]) continue;
                    if (!e_new && g.edge(f).tail != w) continue;
                    if (crosses(e, f)) ok = false;
                }
            }
            if (ok && place(k + 1)) return true;
            placed[w] = false;
        }
        return false;
    };
    enumerate_st_orderings(
        g,
        [&](const StOrdering& pi) {
            d.y = pi;
            std::fill(placed.begin(), placed.end(), false);
            if (place(0) && validate_ldrawing(g, d, true, rightward).ok()) found = d;
            return !found;
        },
        budget);
    return found;
}

std::set<std::pair<EmbeddingKey, std::uint64_t>> realized_port_labelings(const DirectedGraph& g) {
    const int n = g.num_vertices();
    if (n > 6) throw BudgetExceeded("rank-space drawing sweep limited to 6 vertices");
    std::set<std::pair<EmbeddingKey, std::uint64_t>> out;
    LDrawing d;
    d.x.resize(n);
    d.y.resize(n);
    std::iota(d.y.begin(), d.y.end(), 1);
    do {
        std::iota(d.x.begin(), d.x.end(), 1);
        do {
            if (!validate_ldrawing(g, d, false).ok()) continue;
            out.emplace(embedding_key(drawing_embedding(g, d)), labeling_code(labeling_of(g, d)));
        } while (std::next_permutation(d.x.begin(), d.x.end()));
    } while (std::next_permutation(d.y.begin(), d.y.end()));
    return out;
}

bool brute_force_upward_ldrawing_exists(const DirectedGraph& g, bool rightward, const EnumerationBudget& budget) {
    return brute_force_upward_ldrawing(g, rightward, budget).has_value();
}

}  // namespace lplanar
