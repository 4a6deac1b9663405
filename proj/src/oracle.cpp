#include "lplanar/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_set>

#include "lplanar/planarity.hpp"

namespace lplanar {

namespace {

void check_size(const DirectedGraph& g, const EnumerationBudget& b) {
    if (g.num_vertices() > b.max_vertices) throw BudgetExceeded("too many vertices");
    if (g.num_edges() > b.max_edges) throw BudgetExceeded("too many edges");
}

struct Deadline {
    explicit Deadline(double s)
        : end(std::chrono::steady_clock::now() +
              std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(s))) {}
    void check() const {
        if (std::chrono::steady_clock::now() > end) throw BudgetExceeded("wall-clock cap");
    }
    std::chrono::steady_clock::time_point end;
};

}  // namespace

void enumerate_st_orderings(const DirectedGraph& g, const std::function<bool(const StOrdering&)>& f,
                            const EnumerationBudget& budget) {
    check_size(g, budget);
    const int n = g.num_vertices();
    std::vector<int> indeg(n);
    for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
    StOrdering pi(n, 0);
    bool stop = false;
    std::function<void(int)> rec = [&](int r) {
        if (stop) return;
        if (r > n) {
            if (!f(pi)) stop = true;
            return;
        }
        for (Vertex v = 0; v < n && !stop; ++v) {
            if (pi[v] || indeg[v]) continue;
            pi[v] = r;
            for (EdgeId e : g.out_edges(v)) --indeg[g.edge(e).head];
            rec(r + 1);
            for (EdgeId e : g.out_edges(v)) ++indeg[g.edge(e).head];
            pi[v] = 0;
        }
    };
    rec(1);
}

std::uint64_t count_linear_extensions(const DirectedGraph& g) {
    const int n = g.num_vertices();
    if (n > 24) throw BudgetExceeded("linear-extension counter limited to 24 vertices");
    std::vector<std::uint32_t> pred(n, 0);
    for (const Edge& e : g.edges()) pred[e.head] |= 1u << e.tail;
    std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!ways[mask]) continue;
        for (int v = 0; v < n; ++v)
            if (!(mask >> v & 1) && (pred[v] & mask) == pred[v]) ways[mask | 1u << v] += ways[mask];
    }
    return ways[(std::size_t{1} << n) - 1];
}

std::optional<StOrdering> search_fixed_ordering(const DirectedGraph& g, const PlaneEmbedding& emb, Mode mode) {
    return search_fixed_ordering(
        g, emb, std::vector<ListRule>(g.num_vertices(), mode == Mode::Monotone ? ListRule::Decreasing : ListRule::Bitonic));
}

std::optional<StOrdering> search_fixed_ordering(const DirectedGraph& g, const PlaneEmbedding& emb,
                                                const std::vector<ListRule>& rules) {
    const int n = g.num_vertices();
    if (n > 64) throw BudgetExceeded("fixed-ordering search limited to 64 vertices");
    std::vector<std::vector<Vertex>> succ(n);
    std::vector<std::uint64_t> pred(n, 0);
    for (Vertex v = 0; v < n; ++v) succ[v] = successor_list(g, emb, v);
    for (const Edge& e : g.edges()) pred[e.head] |= std::uint64_t{1} << e.tail;
    // Placed successors of p must leave the unplaced ones contiguous (bitonic), a prefix
    // (decreasing) or a suffix (increasing).
    auto list_ok = [&](Vertex p, std::uint64_t mask) {
        const auto& s = succ[p];
        int k = static_cast<int>(s.size()), i = 0;
        auto placed = [&](int j) { return (mask >> s[j] & 1) != 0; };
        switch (rules[p]) {
            case ListRule::Decreasing:
                while (i < k && !placed(i)) ++i;
                while (i < k && placed(i)) ++i;
                return i == k;
            case ListRule::Increasing:
                while (i < k && placed(i)) ++i;
                while (i < k && !placed(i)) ++i;
                return i == k;
            case ListRule::Bitonic: break;
        }
        while (i < k && placed(i)) ++i;
        while (i < k && !placed(i)) ++i;
        while (i < k && placed(i)) ++i;
        return i == k;
    };
    std::unordered_set<std::uint64_t> dead;
    std::vector<Vertex> order;
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::function<bool(std::uint64_t)> rec = [&](std::uint64_t mask) {
        if (mask == full) return true;
        if (dead.count(mask)) return false;
        for (Vertex x = 0; x < n; ++x) {
            if (mask >> x & 1 || (pred[x] & mask) != pred[x]) continue;
            std::uint64_t next = mask | std::uint64_t{1} << x;
            bool ok = true;
            for (EdgeId e : g.in_edges(x)) ok = ok && list_ok(g.edge(e).tail, next);
            if (!ok) continue;
            order.push_back(x);
            if (rec(next)) return true;
            order.pop_back();
        }
        dead.insert(mask);
        return false;
    };
    if (!rec(0)) return std::nullopt;
    StOrdering pi(n);
    for (int i = 0; i < n; ++i) pi[order[i]] = i + 1;
    return pi;
}

void enumerate_plane_embeddings(const DirectedGraph& g, const std::function<bool(const PlaneEmbedding&)>& f,
                                const EnumerationBudget& budget) {
    check_size(g, budget);
    Deadline dl(budget.max_seconds);
    const int n = g.num_vertices();
    std::vector<std::vector<EdgeId>> rot(n);
    for (Vertex v = 0; v < n; ++v) {
        for (EdgeId e : g.out_edges(v)) rot[v].push_back(e);
        for (EdgeId e : g.in_edges(v)) rot[v].push_back(e);
        std::sort(rot[v].begin(), rot[v].end());
    }
    std::uint64_t count = 0;
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) {
            if (++count > budget.max_embeddings) throw BudgetExceeded("too many rotation systems");
            if ((count & 1023) == 0) dl.check();
            PlaneEmbedding emb(g, rot);
            if (!emb.satisfies_euler()) return true;
            for (int fc = 0; fc < emb.num_faces(); ++fc) {
                emb.set_outer_face(fc);
                if (!f(emb)) return false;
            }
            if (emb.num_faces() == 0) return f(emb);
            return true;
        }
        auto& r = rot[v];
        if (r.size() <= 2) return rec(v + 1);
        // Fix the first entry; permute the rest.
        std::sort(r.begin() + 1, r.end());
        do {
            if (!rec(v + 1)) return false;
        } while (std::next_permutation(r.begin() + 1, r.end()));
        return true;
    };
    rec(0);
}

std::vector<PlaneEmbedding> enumerate_upward_embeddings_bruteforce(const DirectedGraph& g,
                                                                   const EnumerationBudget& budget) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    std::vector<PlaneEmbedding> out;
    if (g.num_vertices() == 1) {
        out.emplace_back(g, std::vector<std::vector<EdgeId>>(1));
        return out;
    }
    Vertex s = *rep.source, t = *rep.sink;
    enumerate_plane_embeddings(
        g,
        [&](const PlaneEmbedding& emb) {
            int f = emb.outer_face();
            if (emb.angle_on_face(s, f) >= 0 && emb.angle_on_face(t, f) >= 0) out.push_back(emb);
            return true;
        },
        budget);
    return out;
}

int min_modality_over_embeddings(const DirectedGraph& g, const EnumerationBudget& budget) {
    int best = -1;
    std::set<std::vector<std::vector<EdgeId>>> seen;
    enumerate_plane_embeddings(
        g,
        [&](const PlaneEmbedding& emb) {
            if (!seen.insert(emb.rotations()).second) return true;
            int k = max_modality(g, emb);
            if (best < 0 || k < best) best = k;
            return true;
        },
        budget);
    return best;
}

PairResult brute_force_pair(const DirectedGraph& g, Mode mode, const EnumerationBudget& budget) {
    PairResult r;
    for_each_upward_embedding(
        g,
        [&](const PlaneEmbedding& emb) {
            if (auto pi = search_fixed_ordering(g, emb, mode)) {
                r.found = true;
                r.embedding = emb;
                r.pi = *pi;
                return false;
            }
            return true;
        },
        budget);
    return r;
}

std::vector<std::uint64_t> canonical_form(const DirectedGraph& g) {
    const int n = g.num_vertices();
    if (n > 9) throw BudgetExceeded("canonical form limited to 9 vertices");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (const Edge& e : g.edges()) code |= std::uint64_t{1} << (p[e.tail] * n + p[e.head]);
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return {static_cast<std::uint64_t>(n), best};
}

void for_each_small_st_graph(int n, const std::function<void(const DirectedGraph&)>& f) {
    if (n < 1 || n > 8) throw BudgetExceeded("small-graph generator supports 1..8 vertices");
    if (n == 1) {
        f(DirectedGraph(1));
        return;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int P = static_cast<int>(pairs.size());
    const int st = P == 0 ? -1 : static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(0, n - 1)) - pairs.begin());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << P); ++mask) {
        std::vector<int> outdeg(n, 0), indeg(n, 0);
        int m = 0;
        for (int k = 0; k < P; ++k)
            if (mask >> k & 1) {
                ++outdeg[pairs[k].first];
                ++indeg[pairs[k].second];
                ++m;
            }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (v != 0 && indeg[v] == 0) ok = false;
            if (v != n - 1 && outdeg[v] == 0) ok = false;
        }
        if (!ok) continue;
        int with_st = m + ((mask >> st & 1) ? 0 : 1);
        if (n >= 3 && with_st > 3 * n - 6) continue;
        DirectedGraph g(n);
        for (int k = 0; k < P; ++k)
            if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
        DirectedGraph h = g;
        if (!(mask >> st & 1)) h.add_edge(0, n - 1);
        if (!is_planar(h)) continue;
        f(g);
    }
}

void for_each_connected_planar_digraph(int n, int max_edges, const std::function<void(const DirectedGraph&)>& f) {
    if (n < 1 || n > 6) throw BudgetExceeded("plane digraph generator supports 1..6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t c = 0; c < total; ++c) {
        DirectedGraph g(n);
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int a) {
            while (comp[a] != a) a = comp[a] = comp[comp[a]];
            return a;
        };
        std::uint64_t x = c;
        int m = 0;
        for (auto [a, b] : pairs) {
            int d = static_cast<int>(x % 3);
            x /= 3;
            if (!d) continue;
            ++m;
            comp[find(a)] = find(b);
        }
        if (m > max_edges) continue;
        bool connected = true;
        for (int v = 0; v < n; ++v) connected = connected && find(v) == find(0);
        if (!connected) continue;
        x = c;
        for (auto [a, b] : pairs) {
            int d = static_cast<int>(x % 3);
            x /= 3;
            if (d == 1) g.add_edge(a, b);
            if (d == 2) g.add_edge(b, a);
        }
        if (!is_planar(g) || !seen.insert(canonical_form(g)).second) continue;
        f(g);
    }
}

DirectedGraph random_planar_st_graph(int n, std::mt19937_64& rng, double density, bool allow_st_edge) {
    if (n < 2) return DirectedGraph(std::max(n, 1));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (n == 2) return [] { DirectedGraph g(2); g.add_edge(0, 1); return g; }();
    // Grow a rotation system by subdivisions and face chords. Edge 0 = (s,t) is a sentinel that keeps
    // s and t cofacial; it is never subdivided and is dropped at the end unless kept by chance.
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {2, 1}};
    std::vector<std::vector<int>> rot = {{0, 1}, {2, 0}, {1, 2}};
    int verts = 3;
    auto subdivide = [&](int e) {
        int w = verts++;
        rot.emplace_back();
        auto [u, v] = edges[e];
        int e2 = static_cast<int>(edges.size());
        edges[e] = {u, w};
        edges.push_back({w, v});
        std::replace(rot[v].begin(), rot[v].end(), e, e2);
        rot[w] = {e, e2};
    };
    int guard = 0;
    while (verts < n) {
        if (++guard > 100 * n + 1000) break;
        if (coin(rng) >= density) {
            subdivide(1 + static_cast<int>(rng() % (edges.size() - 1)));
            continue;
        }
        DirectedGraph g(verts);
        for (auto [u, v] : edges) g.add_edge(u, v);
        PlaneEmbedding emb(g, rot);
        int f = static_cast<int>(rng() % emb.num_faces());
        std::vector<std::pair<Vertex, int>> corners;
        for (Dart d : emb.face(f)) {
            Vertex v = emb.dart_target(d);
            corners.emplace_back(v, emb.position(v, dart_edge(d)));
        }
        Reachability reach(g);
        std::vector<std::pair<int, int>> cand;
        for (int i = 0; i < static_cast<int>(corners.size()); ++i)
            for (int j = 0; j < static_cast<int>(corners.size()); ++j) {
                Vertex a = corners[i].first, b = corners[j].first;
                if (a == b || g.has_edge(a, b) || g.has_edge(b, a) || reach.reaches(b, a)) continue;
                cand.emplace_back(i, j);
            }
        if (cand.empty()) continue;
        auto [i, j] = cand[rng() % cand.size()];
        int e = static_cast<int>(edges.size());
        Vertex a = corners[i].first, b = corners[j].first;
        edges.push_back({a, b});
        rot[a].insert(rot[a].begin() + corners[i].second + 1, e);
        rot[b].insert(rot[b].begin() + corners[j].second + 1, e);
    }
    bool keep_st = allow_st_edge && coin(rng) < 0.5;
    DirectedGraph g0(verts);
    for (std::size_t k = keep_st ? 0 : 1; k < edges.size(); ++k) g0.add_edge(edges[k].first, edges[k].second);
    // Relabel along a topological order, so s = 0 and t = n-1.
    auto order = topological_order(g0);
    std::vector<int> id(verts);
    for (int i = 0; i < verts; ++i) id[order[i]] = i;
    std::vector<std::pair<int, int>> relabeled;
    for (const Edge& e : g0.edges()) relabeled.emplace_back(id[e.tail], id[e.head]);
    std::sort(relabeled.begin(), relabeled.end());
    DirectedGraph g(verts);
    for (auto [u, v] : relabeled) g.add_edge(u, v);
    return g;
}

DirectedGraph random_large_planar_st_graph(int n, std::mt19937_64& rng, double density) {
    if (n < 3) return random_planar_st_graph(n, rng, density);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    // Faces kept as (left path, right path) from face source to face sink. A new path between
    // two vertices of one side splits a face in two and cannot close a cycle.
    struct Face {
        std::vector<int> side[2];
    };
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {2, 1}};
    std::unordered_set<std::uint64_t> present;
    auto key = [](int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); };
    for (auto [a, b] : edges) present.insert(key(a, b));
    std::vector<Face> faces(2);
    faces[0].side[0] = {0, 2, 1};
    faces[0].side[1] = {0, 1};
    faces[1].side[0] = {0, 1};
    faces[1].side[1] = {0, 2, 1};
    int verts = 3;
    int guard = 0;
    while (verts < n && ++guard < 50 * n) {
        Face& f = faces[rng() % faces.size()];
        int sd = static_cast<int>(rng() % 2);
        std::vector<int>& S = f.side[sd];
        int len = static_cast<int>(S.size());
        int i = static_cast<int>(rng() % (len - 1));
        int j = i + 1 + static_cast<int>(rng() % (len - 1 - i));
        int a = S[i], b = S[j];
        bool chord = coin(rng) < density && j >= i + 2 && !present.count(key(a, b));
        std::vector<int> path = {a};
        if (!chord) {
            int x = verts++;
            path.push_back(x);
            edges.push_back({a, x});
            edges.push_back({x, b});
            present.insert(key(a, x));
            present.insert(key(x, b));
        } else {
            edges.push_back({a, b});
            present.insert(key(a, b));
        }
        path.push_back(b);
        Face inner;
        inner.side[sd].assign(S.begin() + i, S.begin() + j + 1);
        inner.side[1 - sd] = path;
        std::vector<int> rest(S.begin(), S.begin() + i + 1);
        rest.insert(rest.end(), path.begin() + 1, path.end() - 1);
        rest.insert(rest.end(), S.begin() + j, S.end());
        S = std::move(rest);
        faces.push_back(std::move(inner));
    }
    // Edge 0 = (s,t) is a sentinel; keep it half the time.
    bool keep_st = coin(rng) < 0.5;
    DirectedGraph g0(verts);
    for (std::size_t k = keep_st ? 0 : 1; k < edges.size(); ++k) g0.add_edge(edges[k].first, edges[k].second);
    auto order = topological_order(g0);
    std::vector<int> id(verts);
    for (int k = 0; k < verts; ++k) id[order[k]] = k;
    DirectedGraph g(verts);
    for (const Edge& e : g0.edges()) g.add_edge(id[e.tail], id[e.head]);
    return g;
}

DirectedGraph random_series_parallel(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges = {{0, 1}};
    int verts = 2;
    std::uniform_int_distribution<int> coin(0, 1);
    while (verts < n) {
        std::size_t e = rng() % edges.size();
        auto [u, v] = edges[e];
        int w = verts++;
        if (coin(rng)) {
            edges[e] = {u, w};
            edges.push_back({w, v});
        } else {
            edges.push_back({u, w});
            edges.push_back({w, v});
        }
    }
    DirectedGraph g(verts);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace lplanar
