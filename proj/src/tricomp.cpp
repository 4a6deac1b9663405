#include "tricomp.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace lplanar::detail {
namespace {

enum class EType { Unseen, Tree, Frond, Removed };
using It = std::list<int>::iterator;

struct Dec {
    TriconnectedComponents out;
    int n = 0;

    // per edge
    std::vector<int> src, tgt;
    std::vector<EType> type;
    std::vector<char> start, has_adj, has_high;
    std::vector<It> in_adj, in_high;

    // per vertex
    std::vector<std::vector<int>> inc;
    std::vector<int> number, lowpt1, lowpt2, father, nd, degree, tree_arc, newnum, nodeat;
    std::vector<std::list<int>> adj, highpt;

    std::vector<int> estack;
    std::vector<int> th, ta, tb;
    int top = 0;
    int num_count = 0;
    bool new_path = false;
    int root = 0;

    int new_edge(int u, int v, int real = -1) {
        int id = static_cast<int>(src.size());
        src.push_back(u);
        tgt.push_back(v);
        type.push_back(EType::Unseen);
        start.push_back(0);
        has_adj.push_back(0);
        has_high.push_back(0);
        in_adj.emplace_back();
        in_high.emplace_back();
        out.edges.push_back({u, v, real});
        return id;
    }

    SplitComponent& new_comp(CompType t = CompType::Polygon) {
        out.components.push_back({t, {}});
        return out.components.back();
    }
    static void finish(SplitComponent& c, int e) {
        c.edges.push_back(e);
        c.type = c.edges.size() >= 4 ? CompType::Triconnected : CompType::Polygon;
    }

    void tpush(int h, int a, int b) {
        ++top;
        if (top >= static_cast<int>(ta.size())) {
            th.resize(2 * top + 2);
            ta.resize(2 * top + 2);
            tb.resize(2 * top + 2);
        }
        th[top] = h;
        ta[top] = a;
        tb[top] = b;
    }
    void tpush_eos() { tpush(0, -1, 0); }
    bool t_not_eos() const { return ta[top] != -1; }

    int high(int v) const { return highpt[v].empty() ? 0 : highpt[v].front(); }
    void del_high(int e) {
        if (has_high[e]) {
            highpt[tgt[e]].erase(in_high[e]);
            has_high[e] = 0;
        }
    }
    void adj_del(int e) {
        adj[src[e]].erase(in_adj[e]);
        has_adj[e] = 0;
    }
    int epop() {
        int e = estack.back();
        estack.pop_back();
        return e;
    }

    void dfs1(int v, int u) {
        number[v] = ++num_count;
        father[v] = u;
        degree[v] = static_cast<int>(inc[v].size());
        lowpt1[v] = lowpt2[v] = number[v];
        nd[v] = 1;
        for (int e : inc[v]) {
            if (type[e] != EType::Unseen) continue;
            int w = src[e] == v ? tgt[e] : src[e];
            if (number[w] == 0) {
                type[e] = EType::Tree;
                tree_arc[w] = e;
                dfs1(w, v);
                if (lowpt1[w] < lowpt1[v]) {
                    lowpt2[v] = std::min(lowpt1[v], lowpt2[w]);
                    lowpt1[v] = lowpt1[w];
                } else if (lowpt1[w] == lowpt1[v]) {
                    lowpt2[v] = std::min(lowpt2[v], lowpt2[w]);
                } else {
                    lowpt2[v] = std::min(lowpt2[v], lowpt1[w]);
                }
                nd[v] += nd[w];
            } else {
                type[e] = EType::Frond;
                if (number[w] < lowpt1[v]) {
                    lowpt2[v] = lowpt1[v];
                    lowpt1[v] = number[w];
                } else if (number[w] > lowpt1[v]) {
                    lowpt2[v] = std::min(lowpt2[v], number[w]);
                }
            }
        }
    }

    void build_adj() {
        int buckets = 3 * n + 3;
        std::vector<std::vector<int>> bucket(buckets);
        for (int e = 0; e < static_cast<int>(src.size()); ++e) {
            if (type[e] == EType::Removed) continue;
            int w = tgt[e];
            int phi = type[e] == EType::Frond ? 3 * number[w] + 1
                      : lowpt2[w] < number[src[e]] ? 3 * lowpt1[w]
                                                   : 3 * lowpt1[w] + 2;
            bucket[phi].push_back(e);
        }
        for (auto& b : bucket)
            for (int e : b) {
                auto& l = adj[src[e]];
                in_adj[e] = l.insert(l.end(), e);
                has_adj[e] = 1;
            }
    }

    void path_finder(int v) {
        newnum[v] = num_count - nd[v] + 1;
        for (int e : adj[v]) {
            int w = tgt[e];
            if (new_path) {
                new_path = false;
                start[e] = 1;
            }
            if (type[e] == EType::Tree) {
                path_finder(w);
                --num_count;
            } else {
                in_high[e] = highpt[w].insert(highpt[w].end(), newnum[v]);
                has_high[e] = 1;
                new_path = true;
            }
        }
    }

    void dfs2() {
        num_count = n;
        new_path = true;
        path_finder(root);
        std::vector<int> old2new(n + 1);
        for (int v = 0; v < n; ++v) old2new[number[v]] = newnum[v];
        for (int v = 0; v < n; ++v) {
            nodeat[newnum[v]] = v;
            lowpt1[v] = old2new[lowpt1[v]];
            lowpt2[v] = old2new[lowpt2[v]];
        }
    }

    void path_search(int v) {
        const int vnum = newnum[v];
        auto& av = adj[v];
        int outv = static_cast<int>(av.size());
        for (auto it = av.begin(); it != av.end();) {
            auto it_next = std::next(it);
            int e = *it;
            int w = tgt[e];
            int wnum = newnum[w];

            if (type[e] == EType::Tree) {
                if (start[e]) {
                    int y = 0, b = 0;
                    if (ta[top] > lowpt1[w]) {
                        do {
                            y = std::max(y, th[top]);
                            b = tb[top--];
                        } while (ta[top] > lowpt1[w]);
                        tpush(y, lowpt1[w], b);
                    } else {
                        tpush(wnum + nd[w] - 1, lowpt1[w], vnum);
                    }
                    tpush_eos();
                }

                path_search(w);
                estack.push_back(tree_arc[w]);

                int x = -1;
                while (vnum != 1 &&
                       (ta[top] == vnum || (degree[w] == 2 && newnum[tgt[adj[w].front()]] > wnum))) {
                    int a = ta[top];
                    int b = tb[top];
                    int evirt = -1;
                    if (a == vnum && father[nodeat[b]] == nodeat[a]) {
                        --top;
                        continue;
                    }
                    int e_ab = -1;
                    if (degree[w] == 2 && newnum[tgt[adj[w].front()]] > wnum) {
                        int e1 = epop();
                        int e2 = epop();
                        adj_del(e2);
                        x = tgt[e2];
                        evirt = new_edge(v, x);
                        --degree[x];
                        --degree[v];
                        auto& c = new_comp(CompType::Polygon);
                        c.edges = {e1, e2, evirt};
                        if (!estack.empty()) {
                            int t = estack.back();
                            if (src[t] == x && tgt[t] == v) {
                                e_ab = epop();
                                adj_del(e_ab);
                                del_high(e_ab);
                            }
                        }
                    } else {
                        int h = th[top--];
                        std::size_t ci = out.components.size();
                        new_comp();
                        while (true) {
                            int xy = estack.back();
                            int xs = src[xy], ys = tgt[xy];
                            if (!(a <= newnum[xs] && newnum[xs] <= h && a <= newnum[ys] && newnum[ys] <= h))
                                break;
                            if ((newnum[xs] == a && newnum[ys] == b) || (newnum[ys] == a && newnum[xs] == b)) {
                                e_ab = epop();
                                adj_del(e_ab);
                                del_high(e_ab);
                            } else {
                                int eh = epop();
                                if (!(has_adj[eh] && in_adj[eh] == it)) {
                                    adj_del(eh);
                                    del_high(eh);
                                }
                                out.components[ci].edges.push_back(eh);
                                --degree[xs];
                                --degree[ys];
                            }
                        }
                        evirt = new_edge(nodeat[a], nodeat[b]);
                        finish(out.components[ci], evirt);
                        x = nodeat[b];
                    }

                    if (e_ab != -1) {
                        auto& c = new_comp(CompType::Bond);
                        c.edges = {e_ab, evirt};
                        evirt = new_edge(v, x);
                        out.components.back().edges.push_back(evirt);
                        --degree[x];
                        --degree[v];
                    }

                    estack.push_back(evirt);
                    *it = evirt;
                    in_adj[evirt] = it;
                    has_adj[evirt] = 1;
                    ++degree[x];
                    ++degree[v];
                    father[x] = v;
                    tree_arc[x] = evirt;
                    type[evirt] = EType::Tree;
                    w = x;
                    wnum = newnum[w];
                }

                if (lowpt2[w] >= vnum && lowpt1[w] < vnum && (father[v] != root || outv >= 2)) {
                    std::size_t ci = out.components.size();
                    new_comp();
                    int xn = 0, yn = 0;
                    while (!estack.empty()) {
                        int xy = estack.back();
                        xn = newnum[src[xy]];
                        yn = newnum[tgt[xy]];
                        if (!((wnum <= xn && xn < wnum + nd[w]) || (wnum <= yn && yn < wnum + nd[w]))) break;
                        out.components[ci].edges.push_back(epop());
                        del_high(xy);
                        --degree[nodeat[xn]];
                        --degree[nodeat[yn]];
                    }
                    const int lw = lowpt1[w];
                    const int lv = nodeat[lw];
                    int evirt = new_edge(v, lv);
                    finish(out.components[ci], evirt);

                    if ((xn == vnum && yn == lw) || (yn == vnum && xn == lw)) {
                        int eh = epop();
                        if (!(has_adj[eh] && in_adj[eh] == it)) adj_del(eh);
                        auto& c = new_comp(CompType::Bond);
                        c.edges = {eh, evirt};
                        evirt = new_edge(v, lv);
                        out.components.back().edges.push_back(evirt);
                        in_high[evirt] = in_high[eh];
                        has_high[evirt] = has_high[eh];
                        --degree[v];
                        --degree[lv];
                    }

                    if (lv != father[v]) {
                        estack.push_back(evirt);
                        *it = evirt;
                        in_adj[evirt] = it;
                        has_adj[evirt] = 1;
                        if (!has_high[evirt] && high(lv) < vnum) {
                            in_high[evirt] = highpt[lv].insert(highpt[lv].begin(), vnum);
                            has_high[evirt] = 1;
                        }
                        ++degree[v];
                        ++degree[lv];
                    } else {
                        if (has_adj[*it] && in_adj[*it] == it) has_adj[*it] = 0;
                        av.erase(it);
                        auto& c = new_comp(CompType::Bond);
                        c.edges.push_back(evirt);
                        evirt = new_edge(lv, v);
                        int eh = tree_arc[v];
                        out.components.back().edges.push_back(evirt);
                        out.components.back().edges.push_back(eh);
                        tree_arc[v] = evirt;
                        type[evirt] = EType::Tree;
                        in_adj[evirt] = in_adj[eh];
                        has_adj[evirt] = has_adj[eh];
                        has_adj[eh] = 0;
                        *in_adj[evirt] = evirt;
                    }
                }

                if (start[e]) {
                    while (t_not_eos()) --top;
                    --top;
                }
                while (t_not_eos() && tb[top] != vnum && high(v) > th[top]) --top;
                --outv;
            } else {
                if (start[e]) {
                    int y = 0, b = 0;
                    if (ta[top] > wnum) {
                        do {
                            y = std::max(y, th[top]);
                            b = tb[top--];
                        } while (ta[top] > wnum);
                        tpush(y, wnum, b);
                    } else {
                        tpush(vnum, wnum, vnum);
                    }
                }
                estack.push_back(e);
            }
            it = it_next;
        }
    }

    void assemble() {
        auto& comps = out.components;
        const int k = static_cast<int>(comps.size());
        const int m = static_cast<int>(out.edges.size());
        std::vector<int> comp1(m, -1), comp2(m, -1);
        for (int i = 0; i < k; ++i)
            for (int e : comps[i].edges) (comp1[e] == -1 ? comp1[e] : comp2[e]) = i;

        std::vector<char> visited(k, 0);
        for (int i = 0; i < k; ++i) {
            visited[i] = 1;
            auto& c1 = comps[i];
            if (c1.edges.empty() || c1.type == CompType::Triconnected) continue;
            // merge same-type neighbours; the edge list grows while scanning
            for (std::size_t pos = 0; pos < c1.edges.size();) {
                int e = c1.edges[pos];
                if (out.edges[e].real != -1) {
                    ++pos;
                    continue;
                }
                int j = comp1[e] == i ? comp2[e] : comp1[e];
                if (j < 0 || visited[j] || comps[j].type != c1.type) {
                    ++pos;
                    continue;
                }
                visited[j] = 1;
                auto& l2 = comps[j].edges;
                for (int f : l2)
                    if (f != e) {
                        c1.edges.push_back(f);
                        if (out.edges[f].real == -1) (comp1[f] == j ? comp1[f] : comp2[f]) = i;
                    }
                l2.clear();
                c1.edges.erase(c1.edges.begin() + static_cast<std::ptrdiff_t>(pos));
                comp1[e] = comp2[e] = -2;
            }
        }
        std::erase_if(comps, [](const SplitComponent& c) { return c.edges.empty(); });
    }
};

}  // namespace

TriconnectedComponents triconnected_components(int n, const std::vector<std::pair<int, int>>& edges) {
    Dec d;
    d.n = n;
    if (n < 3) throw std::invalid_argument("triconnected_components: need at least 3 vertices");
    d.inc.resize(n);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto [u, v] = edges[i];
        int e = d.new_edge(u, v, i);
        d.inc[u].push_back(e);
        d.inc[v].push_back(e);
    }
    const int m = static_cast<int>(edges.size());
    d.number.assign(n, 0);
    d.lowpt1.assign(n, 0);
    d.lowpt2.assign(n, 0);
    d.father.assign(n, -1);
    d.nd.assign(n, 0);
    d.degree.assign(n, 0);
    d.tree_arc.assign(n, -1);
    d.newnum.assign(n, 0);
    d.nodeat.assign(n + 1, -1);
    d.adj.resize(n);
    d.highpt.resize(n);

    d.dfs1(d.root, -1);
    for (int e = 0; e < m; ++e) {
        bool up = d.number[d.tgt[e]] - d.number[d.src[e]] > 0;
        if ((up && d.type[e] == EType::Frond) || (!up && d.type[e] == EType::Tree)) std::swap(d.src[e], d.tgt[e]);
    }
    d.build_adj();
    d.dfs2();

    d.th.assign(2 * m + 2, 0);
    d.ta.assign(2 * m + 2, 0);
    d.tb.assign(2 * m + 2, 0);
    d.ta[d.top = 0] = -1;
    d.path_search(d.root);

    auto& last = d.new_comp();
    while (!d.estack.empty()) last.edges.push_back(d.epop());
    last.type = last.edges.size() > 4 ? CompType::Triconnected : CompType::Polygon;

    // keep the stored orientation of every edge consistent with the final src/tgt arrays
    for (std::size_t e = 0; e < d.out.edges.size(); ++e) {
        d.out.edges[e].u = d.src[e];
        d.out.edges[e].v = d.tgt[e];
    }
    d.assemble();
    return std::move(d.out);
}

}  // namespace lplanar::detail
