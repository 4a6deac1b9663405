#include <algorithm>
#include <array>
#include <stdexcept>

#include "lplanar/planarity.hpp"
#include "lplanar/variable.hpp"

namespace lplanar {

const char* reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::TwoTypeB: return "two-type-b-children";
        case RejectReason::TypeBWithStEdge: return "type-b-child-with-pole-edge";
        case RejectReason::RigidFan: return "rigid-fan";
        case RejectReason::RootList: return "root-list";
        case RejectReason::PolesNotCofacial: return "source-and-sink-not-cofacial";
    }
    return "?";
}

bool set_has_type_m(std::uint16_t set) {
    for (int c = 0; c < 16; ++c)
        if ((set >> c & 1) && code_type_m(c)) return true;
    return false;
}

namespace {

constexpr int kZ = 0, kP = 1, kN = 2, kB = 3, kInv = 4;
constexpr int mk(int c, bool f, bool l) { return c | (f ? 4 : 0) | (l ? 8 : 0); }
constexpr int cls(int code) { return code & 3; }
constexpr bool ftip(int code) { return (code & 4) != 0; }
constexpr bool ltip(int code) { return (code & 8) != 0; }

int compose(int a, int b) {
    if (a == kInv || b == kInv) return kInv;
    if (a == kZ) return b;
    if (b == kZ) return a;
    static constexpr int table[4][4] = {{0, 0, 0, 0}, {0, kP, kB, kB}, {0, kInv, kN, kInv}, {0, kInv, kB, kInv}};
    return table[a][b];
}
int sign_class(int sgn) { return sgn > 0 ? kP : sgn < 0 ? kN : kZ; }

// Sign between the last element of one block and the first of the next. rel: +1 if the
// left block's tip reaches the right one's, -1 for the converse.
int separator(bool left_tip, bool right_tip, int rel) {
    if (left_tip && right_tip) return rel;
    if (left_tip) return rel < 0 ? -1 : 0;
    if (right_tip) return rel > 0 ? 1 : 0;
    return 0;
}

bool allowed(int c, Mode mode) { return c != kInv && (mode == Mode::Bitonic || c == kZ || c == kN); }

bool class_le(int a, int b) { return a == kZ || a == b || b == kB; }

std::uint16_t prune(std::uint16_t set) {
    std::uint16_t out = set;
    for (int y = 0; y < 16; ++y) {
        if (!(set >> y & 1)) continue;
        for (int x = 0; x < 16; ++x)
            if (x != y && (set >> x & 1) && class_le(cls(x), cls(y)) && ftip(x) <= ftip(y) && ltip(x) <= ltip(y)) {
                out &= static_cast<std::uint16_t>(~(1u << y));
                break;
            }
    }
    return out;
}

int lowest(std::uint16_t set) {
    for (int c = 0; c < 16; ++c)
        if (set >> c & 1) return c;
    return -1;
}

struct Plan {
    bool mirror = false;
    bool st_first = true;
    std::vector<int> order;                 // P nodes
    std::vector<std::pair<int, int>> kids;  // (child node, code)
};

struct NodeData {
    std::uint16_t set = 0;
    std::array<int, 16> plan_of{};
    std::vector<Plan> plans;
    void add(int code, Plan p) {
        if (set >> code & 1) return;
        set |= static_cast<std::uint16_t>(1u << code);
        plan_of[code] = static_cast<int>(plans.size());
        plans.push_back(std::move(p));
    }
    void finish() { set = prune(set); }
};

struct FanDp {
    std::vector<std::array<std::int8_t, 16>> prev, code;
    std::uint16_t finals = 0;
};

FanDp run_fan(const std::vector<std::uint16_t>& sets, const std::vector<int>& rel, Mode mode) {
    FanDp dp;
    const std::size_t k = sets.size();
    dp.prev.resize(k);
    dp.code.resize(k);
    std::uint16_t cur = 0;
    for (int c = 0; c < 16; ++c)
        if ((sets[0] >> c & 1) && allowed(cls(c), mode)) {
            cur |= static_cast<std::uint16_t>(1u << c);
            dp.prev[0][c] = -1;
            dp.code[0][c] = static_cast<std::int8_t>(c);
        }
    for (std::size_t i = 1; i < k && cur; ++i) {
        std::uint16_t nxt = 0;
        for (int st = 0; st < 16; ++st) {
            if (!(cur >> st & 1)) continue;
            for (int c = 0; c < 16; ++c) {
                if (!(sets[i] >> c & 1)) continue;
                int sep = separator(ltip(st), ftip(c), rel[i - 1]);
                int k2 = compose(compose(cls(st), sign_class(sep)), cls(c));
                if (!allowed(k2, mode)) continue;
                int ns = mk(k2, ftip(st), ltip(c));
                if (nxt >> ns & 1) continue;
                nxt |= static_cast<std::uint16_t>(1u << ns);
                dp.prev[i][ns] = static_cast<std::int8_t>(st);
                dp.code[i][ns] = static_cast<std::int8_t>(c);
            }
        }
        cur = nxt;
    }
    dp.finals = cur;
    return dp;
}

std::vector<int> fan_codes(const FanDp& dp, int final_state) {
    std::vector<int> out(dp.code.size());
    int st = final_state;
    for (std::size_t i = dp.code.size(); i-- > 0;) {
        out[i] = dp.code[i][st];
        st = dp.prev[i][st];
    }
    return out;
}

struct Processor {
    const DirectedGraph& h;
    const SpqrTree& tree;
    Mode mode;
    EdgeId st_edge;
    std::vector<NodeData> data;
    RejectReason reason = RejectReason::None;
    int reject_node = kNone;
    Vertex reject_vertex = kNone;

    bool is_root(int id) const { return id == tree.root(); }

    void process_q(int id) {
        data[id].add(mk(kZ, true, true), {});
    }

    // Root S and R: append the (s,t) successor at either end of the source's block.
    void add_root_codes(NodeData& nd, int x_class, Plan base) {
        int a = compose(kN, x_class);
        if (allowed(a, mode)) {
            Plan p = base;
            p.st_first = true;
            nd.add(mk(a, true, false), std::move(p));
        }
        int b = compose(x_class, kP);
        if (allowed(b, mode)) {
            Plan p = std::move(base);
            p.st_first = false;
            nd.add(mk(b, false, true), std::move(p));
        }
    }

    void process_s(int id) {
        const auto& nd = tree.node(id);
        auto& out = data[id];
        int first = kNone;
        Plan base;
        for (const auto& se : nd.edges) {
            if (se.is_parent()) continue;
            if (se.real == st_edge && is_root(id)) {
                base.kids.push_back({se.child, mk(kZ, true, true)});
                continue;
            }
            if (se.tail == nd.s) first = se.child;
            else base.kids.push_back({se.child, lowest(data[se.child].set)});
        }
        for (int c = 0; c < 16; ++c) {
            if (!(data[first].set >> c & 1)) continue;
            Plan p = base;
            p.kids.push_back({first, c});
            if (is_root(id))
                add_root_codes(out, cls(c), std::move(p));
            else
                out.add(mk(cls(c), false, false), std::move(p));
        }
        if (!out.set) fail(id, RejectReason::RootList, nd.s);
        out.finish();
    }

    void process_p(int id) {
        const auto& nd = tree.node(id);
        auto& out = data[id];
        int q = kNone;
        std::vector<int> others;  // skeleton edge indices
        for (int k = 0; k < static_cast<int>(nd.edges.size()); ++k) {
            const auto& se = nd.edges[k];
            if (se.is_parent()) continue;
            if (se.real != kNone)
                q = k;
            else
                others.push_back(k);
        }
        auto child = [&](int k) { return nd.edges[k].child; };
        auto pick = [&](int k, int c) {
            std::uint16_t set = data[child(k)].set;
            for (int code = 0; code < 16; ++code)
                if ((set >> code & 1) && cls(code) == c) return code;
            return -1;
        };
        auto has = [&](int k, int c) { return pick(k, c) >= 0; };
        const std::size_t m = others.size();
        std::size_t b_only = 0;
        for (int k : others)
            if (!has(k, kZ) && !has(k, kP) && !has(k, kN)) ++b_only;

        auto uniform = [&](int cl, bool q_left, bool q_right, int code) {
            // every other child uses Z, or class cl
            Plan p;
            if (q_left) p.order.push_back(q);
            for (int k : others) {
                int c = has(k, kZ) ? pick(k, kZ) : pick(k, cl);
                if (c < 0) return;
                p.order.push_back(k);
                p.kids.push_back({child(k), c});
            }
            if (q_right) p.order.push_back(q);
            if (q != kNone) p.kids.push_back({child(q), mk(kZ, true, true)});
            if (allowed(cls(code), mode)) out.add(code, std::move(p));
        };

        if (q == kNone) {
            bool all_z = std::all_of(others.begin(), others.end(), [&](int k) { return has(k, kZ); });
            if (all_z) uniform(kZ, false, false, mk(kZ, false, false));
            uniform(kP, false, false, mk(kP, false, false));
            uniform(kN, false, false, mk(kN, false, false));
            if (!out.set && b_only <= 1 && mode == Mode::Bitonic) {
                Plan p;
                std::vector<int> left, right;
                int apex = kNone;
                for (int k : others) {
                    int c;
                    if ((c = pick(k, kZ)) >= 0 || (c = pick(k, kP)) >= 0) {
                        left.push_back(k);
                    } else if ((c = pick(k, kN)) >= 0) {
                        right.push_back(k);
                    } else {
                        c = pick(k, kB);
                        apex = k;
                    }
                    p.kids.push_back({child(k), c});
                }
                p.order = left;
                if (apex != kNone) p.order.push_back(apex);
                p.order.insert(p.order.end(), right.begin(), right.end());
                out.add(mk(kB, false, false), std::move(p));
            }
            if (!out.set) fail(id, RejectReason::TwoTypeB, nd.s);
        } else {
            if (b_only > 0) {
                fail(id, RejectReason::TypeBWithStEdge, nd.s);
                return;
            }
            uniform(kP, false, true, mk(kP, false, true));
            uniform(kN, true, false, mk(kN, true, false));
            if (m >= 2 && mode == Mode::Bitonic) {
                // right group needs Z or N, left group Z or P, both non-empty
                int r = kNone;
                for (int k : others)
                    if (has(k, kZ) || has(k, kN)) {
                        r = k;
                        break;
                    }
                int l = kNone;
                for (int k : others)
                    if (k != r && (has(k, kZ) || has(k, kP))) {
                        l = k;
                        break;
                    }
                if (r != kNone && l != kNone) {
                    Plan p;
                    std::vector<int> left, right{r};
                    for (int k : others) {
                        if (k == r) continue;
                        if (has(k, kZ) || has(k, kP)) left.push_back(k);
                        else right.push_back(k);
                    }
                    for (int k : left) p.kids.push_back({child(k), has(k, kZ) ? pick(k, kZ) : pick(k, kP)});
                    for (int k : right) p.kids.push_back({child(k), has(k, kZ) ? pick(k, kZ) : pick(k, kN)});
                    p.order = left;
                    p.order.push_back(q);
                    p.order.insert(p.order.end(), right.begin(), right.end());
                    p.kids.push_back({child(q), mk(kZ, true, true)});
                    out.add(mk(kB, false, false), std::move(p));
                }
            }
            if (!out.set) fail(id, RejectReason::TypeBWithStEdge, nd.s);
        }
        out.finish();
    }

    void process_r(int id) {
        const auto& nd = tree.node(id);
        auto& out = data[id];
        const int nv = static_cast<int>(nd.vertices.size());
        DirectedGraph sk(nv);
        for (const auto& se : nd.edges) sk.add_edge(nd.local(se.tail), nd.local(se.head));
        const int ls = nd.local(nd.s);
        int cut_edge = nd.parent_edge;
        if (is_root(id))
            for (int k = 0; k < static_cast<int>(nd.edges.size()); ++k)
                if (nd.edges[k].real == st_edge) cut_edge = k;

        Vertex failed_at = kNone;
        for (int mirror = 0; mirror < 2; ++mirror) {
            auto rot = nd.rotation;
            if (mirror)
                for (auto& l : rot) std::reverse(l.begin(), l.end());
            PlaneEmbedding emb(sk, rot);
            std::vector<Vertex> sink(emb.num_faces(), kNone);
            for (int f = 0; f < emb.num_faces(); ++f) {
                const auto& ds = emb.face(f);
                for (std::size_t i = 0; i < ds.size(); ++i) {
                    Dart d = ds[i], nx = ds[(i + 1) % ds.size()];
                    if (!(d & 1) && (nx & 1)) sink[f] = emb.dart_target(d);
                }
            }
            Plan fixed;
            fixed.mirror = mirror != 0;
            if (is_root(id)) fixed.kids.push_back({nd.edges[cut_edge].child, mk(kZ, true, true)});
            bool ok = true;
            FanDp sdp;
            std::vector<int> sfan;
            for (int v = 0; v < nv && ok; ++v) {
                const auto& r = rot[v];
                const int d = static_cast<int>(r.size());
                auto is_out = [&](int pos) { return sk.edge(r[(pos % d + d) % d]).tail == v; };
                int start = -1;
                if (v == ls) {
                    start = static_cast<int>(std::find(r.begin(), r.end(), cut_edge) - r.begin()) + 1;
                } else {
                    for (int j = 0; j < d; ++j)
                        if (is_out(j) && !is_out(j - 1)) start = j;
                }
                if (start < 0) continue;  // the sink
                std::vector<int> pos;
                for (int j = 0; j < d; ++j) {
                    int p = (start + j) % d;
                    if (r[p] == cut_edge && v == ls) break;
                    if (!is_out(p)) break;
                    pos.push_back(p);
                }
                std::vector<std::uint16_t> sets;
                std::vector<int> rel;
                for (std::size_t i = 0; i < pos.size(); ++i) {
                    sets.push_back(data[nd.edges[r[pos[i]]].child].set);
                    if (i + 1 < pos.size()) {
                        Vertex a = sk.edge(r[pos[i]]).head, b = sk.edge(r[pos[i + 1]]).head;
                        Vertex w = sink[emb.face_of_angle(v, pos[i])];
                        rel.push_back(w == b ? 1 : w == a ? -1 : 0);
                    }
                }
                FanDp dp = run_fan(sets, rel, mode);
                if (v == ls) {
                    sdp = std::move(dp);
                    sfan.clear();
                    for (int p : pos) sfan.push_back(nd.edges[r[p]].child);
                    if (!sdp.finals) ok = false;
                } else {
                    if (!dp.finals) {
                        ok = false;
                    } else {
                        auto codes = fan_codes(dp, lowest(dp.finals));
                        for (std::size_t i = 0; i < pos.size(); ++i)
                            fixed.kids.push_back({nd.edges[r[pos[i]]].child, codes[i]});
                    }
                }
                if (!ok && failed_at == kNone) failed_at = nd.vertices[v];
            }
            if (!ok) continue;
            for (int st = 0; st < 16; ++st) {
                if (!(sdp.finals >> st & 1)) continue;
                Plan p = fixed;
                auto codes = fan_codes(sdp, st);
                for (std::size_t i = 0; i < sfan.size(); ++i) p.kids.push_back({sfan[i], codes[i]});
                if (is_root(id))
                    add_root_codes(out, cls(st), std::move(p));
                else
                    out.add(mk(cls(st), false, false), std::move(p));
            }
        }
        if (!out.set) fail(id, RejectReason::RigidFan, failed_at == kNone ? nd.s : failed_at);
        out.finish();
    }

    void fail(int id, RejectReason r, Vertex v) {
        if (reason != RejectReason::None) return;
        reason = r;
        reject_node = id;
        reject_vertex = v;
    }

    bool run() {
        data.assign(tree.size(), {});
        for (int id : tree.postorder()) {
            switch (tree.node(id).kind) {
                case NodeKind::Q: process_q(id); break;
                case NodeKind::S: process_s(id); break;
                case NodeKind::P: process_p(id); break;
                case NodeKind::R: process_r(id); break;
            }
            if (reason != RejectReason::None) return false;
        }
        return data[tree.root()].set != 0;
    }

    // Replays the recorded plans from the root; returns the code chosen at every node.
    std::vector<int> replay(EmbeddingChoice& choice) const {
        std::vector<int> chosen(tree.size(), -1);
        chosen[tree.root()] = lowest(data[tree.root()].set);
        std::vector<int> stack{tree.root()};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            const auto& nd = data[id];
            const Plan& p = nd.plans[nd.plan_of[chosen[id]]];
            switch (tree.node(id).kind) {
                case NodeKind::P: choice.order[id] = p.order; break;
                case NodeKind::R: choice.mirror[id] = p.mirror; break;
                default: break;
            }
            if (id == tree.root()) choice.st_first = p.st_first;
            for (auto [c, code] : p.kids) {
                chosen[c] = code;
                stack.push_back(c);
            }
        }
        return chosen;
    }
};

std::vector<NodeTrace> build_trace(const DirectedGraph& h, const SpqrTree& tree, const PlaneEmbedding& emb,
                                   const StOrdering& pi, const std::vector<int>& chosen,
                                   const EmbeddingChoice& choice) {
    std::vector<NodeTrace> out;
    for (int id = 0; id < tree.size(); ++id) {
        const auto& nd = tree.node(id);
        NodeTrace tr;
        tr.node = id;
        tr.kind = nd.kind;
        tr.s = nd.s;
        tr.t = nd.t;
        tr.sign_class = code_class(chosen[id]);
        tr.type_m = code_type_m(chosen[id]);
        tr.mirror = nd.kind == NodeKind::R && choice.mirror[id];
        auto es = pertinent_edges(tree, id);
        std::vector<Vertex> block;
        for (EdgeId e : successor_edges(h, emb, nd.s))
            if (std::binary_search(es.begin(), es.end(), e)) block.push_back(h.edge(e).head);
        if (!block.empty()) {
            switch (tr.sign_class) {
                case SignClass::Zero:
                case SignClass::Plus:
                    tr.firsts = {block.front()};
                    tr.last = block.back();
                    break;
                case SignClass::Minus:
                    tr.firsts = {block.back()};
                    tr.last = block.front();
                    break;
                case SignClass::Both: tr.firsts = {block.front(), block.back()}; break;
            }
        }
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            Vertex a = block[i], b = block[i + 1];
            if (pi[a] > pi[b]) std::swap(a, b);
            if (!h.has_edge(a, b)) tr.added_edges.push_back({a, b});
        }
        out.push_back(std::move(tr));
    }
    return out;
}

}  // namespace

VariableResult test_variable(const DirectedGraph& g, Mode mode, bool with_trace) {
    VariableResult res;
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    const Vertex s = *rep.source, t = *rep.sink;
    const int n = g.num_vertices();
    if (n == 1) {
        res.accepted = true;
        res.embedding = PlaneEmbedding(g, std::vector<std::vector<EdgeId>>(1));
        res.pi = {1};
        res.processed = g;
        return res;
    }
    if (!is_planar(g)) planar_embed(g);  // throws NotPlanar with a witness

    const bool strip = !g.has_edge(s, t);
    res.processed = strip ? add_super_source(g) : g;
    const DirectedGraph& h = res.processed;
    const Vertex hs = strip ? n : s;
    if (strip && !is_planar(h)) {
        res.reason = RejectReason::PolesNotCofacial;
        res.message = reason_name(res.reason);
        return res;
    }
    res.tree = build_spqr(h, hs, t);
    const SpqrTree& tree = res.tree;

    Processor proc{h, tree, mode, tree.node(tree.reference_q()).real, {}};
    bool ok = proc.run();
    res.node_sets.resize(tree.size());
    for (int i = 0; i < tree.size(); ++i) res.node_sets[i] = proc.data[i].set;
    if (!ok) {
        res.reason = proc.reason == RejectReason::None ? RejectReason::RootList : proc.reason;
        res.reject_node = proc.reject_node == kNone ? tree.root() : proc.reject_node;
        res.reject_vertex = proc.reject_vertex;
        res.message = std::string("node ") + std::to_string(res.reject_node) + " (" +
                      kind_char(tree.node(res.reject_node).kind) + "): " + reason_name(res.reason);
        return res;
    }

    EmbeddingChoice choice = default_choice(tree);
    auto chosen = proc.replay(choice);
    PlaneEmbedding hemb = realize_embedding(h, tree, choice);
    FixedTestResult fixed = test_bitonic_fixed(h, hemb, mode);
    if (!fixed.accepted) throw std::logic_error("realized embedding rejected by the fixed-embedding test");
    if (with_trace) res.trace = build_trace(h, tree, hemb, fixed.pi, chosen, choice);

    if (!strip) {
        res.embedding = std::move(hemb);
        res.pi = std::move(fixed.pi);
    } else {
        // drop the added source; its edge to s marks the outer angle at s
        const EdgeId to_s = *h.find_edge(hs, s);
        auto rot = hemb.rotations();
        rot.pop_back();
        for (auto& l : rot) l.erase(std::remove_if(l.begin(), l.end(), [&](EdgeId e) { return e >= g.num_edges(); }), l.end());
        const auto& rs = hemb.rotation(s);
        auto at = std::find(rs.begin(), rs.end(), to_s) - rs.begin();
        EdgeId after = rs[(at + 1) % rs.size()];
        auto& ls = rot[s];
        std::rotate(ls.begin(), std::find(ls.begin(), ls.end(), after), ls.end());
        res.embedding = PlaneEmbedding(g, std::move(rot));
        res.embedding.set_outer_face(
            res.embedding.face_of_angle(s, static_cast<int>(res.embedding.rotation(s).size()) - 1));
        res.pi.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) res.pi[v] = fixed.pi[v] - 1;
    }
    if (!is_valid_pair(g, res.embedding, res.pi, mode))
        throw std::logic_error("variable test produced an invalid pair");
    augment_with_ordering(g, res.embedding, res.pi, &res.added_edges);
    res.accepted = true;
    return res;
}

bool is_v_bitonic_augmentation(const DirectedGraph& g, const PlaneEmbedding& emb, const DirectedGraph& gstar,
                               Mode mode, Vertex* bad) {
    auto rep = validate_st_graph(gstar);
    if (!rep.ok || gstar.num_vertices() != g.num_vertices()) return false;
    for (const Edge& e : g.edges())
        if (!gstar.has_edge(e.tail, e.head)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto succ = successor_list(g, emb, v);
        const int k = static_cast<int>(succ.size());
        std::vector<int> idx(g.num_vertices(), -1);
        for (int i = 0; i < k; ++i) idx[succ[i]] = i;
        std::vector<std::vector<int>> adj(k);
        for (int i = 0; i < k; ++i)
            for (EdgeId e : gstar.out_edges(succ[i]))
                if (int j = idx[gstar.edge(e).head]; j >= 0) adj[i].push_back(j);
        // reach[i][j] within the induced subgraph, by DFS from each vertex
        std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
        for (int i = 0; i < k; ++i) {
            std::vector<int> st{i};
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y : adj[x])
                    if (!reach[i][y]) {
                        reach[i][y] = 1;
                        st.push_back(y);
                    }
            }
        }
        bool good = true;
        std::vector<int> dir(std::max(k - 1, 0), 0);
        for (int i = 0; i < k && good; ++i)
            for (int j : adj[i]) {
                bool transitive = false;
                for (int c : adj[i])
                    if (c != j && reach[c][j]) transitive = true;
                if (transitive) continue;
                if (j == i + 1)
                    dir[i] = 1;
                else if (j + 1 == i)
                    dir[j] = -1;
                else
                    good = false;
            }
        bool seen_minus = false;
        for (int i = 0; i + 1 < k && good; ++i) {
            if (dir[i] == 0) good = false;
            else if (dir[i] < 0) seen_minus = true;
            else if (seen_minus || mode == Mode::Monotone) good = false;
        }
        if (!good) {
            if (bad) *bad = v;
            return false;
        }
    }
    return true;
}

}  // namespace lplanar
