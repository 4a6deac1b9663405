#include "lplanar/spqr.hpp"

#include <pthread.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "lplanar/planarity.hpp"
#include "tricomp.hpp"

namespace lplanar {

char kind_char(NodeKind k) {
    switch (k) {
        case NodeKind::S: return 'S';
        case NodeKind::P: return 'P';
        case NodeKind::Q: return 'Q';
        case NodeKind::R: return 'R';
    }
    return '?';
}

namespace {
struct StackJob {
    const std::function<void()>* f;
    std::exception_ptr err;
};
void* stack_trampoline(void* p) {
    auto* job = static_cast<StackJob*>(p);
    try {
        (*job->f)();
    } catch (...) {
        job->err = std::current_exception();
    }
    return nullptr;
}
}  // namespace

void run_with_large_stack(const std::function<void()>& f) {
    StackJob job{&f, nullptr};
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
    pthread_t th;
    if (pthread_create(&th, &attr, stack_trampoline, &job) != 0) {
        pthread_attr_destroy(&attr);
        f();
        return;
    }
    pthread_join(th, nullptr);
    pthread_attr_destroy(&attr);
    if (job.err) std::rethrow_exception(job.err);
}

bool is_biconnected(const DirectedGraph& g, Vertex* cut) {
    const int n = g.num_vertices();
    if (n <= 1) return true;
    if (n == 2) return g.num_edges() >= 1;
    std::vector<int> num(n, 0), low(n, 0), parent_edge(n, kNone);
    std::vector<std::size_t> pos(n, 0);
    std::vector<std::vector<EdgeId>> inc(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        inc[g.edge(e).tail].push_back(e);
        inc[g.edge(e).head].push_back(e);
    }
    int counter = 0, root_children = 0;
    std::vector<Vertex> stack{0};
    num[0] = low[0] = ++counter;
    while (!stack.empty()) {
        Vertex v = stack.back();
        if (pos[v] < inc[v].size()) {
            EdgeId e = inc[v][pos[v]++];
            if (e == parent_edge[v]) continue;
            Vertex w = g.other(e, v);
            if (num[w] == 0) {
                num[w] = low[w] = ++counter;
                parent_edge[w] = e;
                if (v == 0) ++root_children;
                stack.push_back(w);
            } else {
                low[v] = std::min(low[v], num[w]);
            }
        } else {
            stack.pop_back();
            if (stack.empty()) break;
            Vertex u = stack.back();
            low[u] = std::min(low[u], low[v]);
            if (u != 0 && low[v] >= num[u]) {
                if (cut) *cut = u;
                return false;
            }
        }
    }
    if (counter < n) {
        if (cut) *cut = kNone;
        return false;
    }
    if (root_children > 1) {
        if (cut) *cut = 0;
        return false;
    }
    return true;
}

int SpqrNode::local(Vertex v) const {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
}

std::vector<int> SpqrTree::postorder() const {
    std::vector<int> order(nodes_.size());
    std::iota(order.rbegin(), order.rend(), 0);
    return order;
}

SpqrTree build_spqr(const DirectedGraph& g) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    return build_spqr(g, *rep.source, *rep.sink);
}

SpqrTree build_spqr(const DirectedGraph& g, Vertex s, Vertex t) {
    auto ref = g.find_edge(s, t);
    if (!ref) throw ReferenceEdgeMissing();
    Vertex cut = kNone;
    if (!is_biconnected(g, &cut)) throw NotBiconnected(cut);

    SpqrTree tree;
    const int n = g.num_vertices();
    const int m = g.num_edges();
    tree.q_of_edge_.assign(m, kNone);

    auto make_q = [&](EdgeId e, int parent) {
        SpqrNode q;
        q.kind = NodeKind::Q;
        q.s = g.edge(e).tail;
        q.t = g.edge(e).head;
        q.parent = parent;
        q.real = e;
        q.vertices = {q.s, q.t};
        tree.nodes_.push_back(std::move(q));
        int id = static_cast<int>(tree.nodes_.size()) - 1;
        tree.q_of_edge_[e] = id;
        return id;
    };

    if (n == 2) {
        tree.root_ = tree.ref_q_ = make_q(*ref, kNone);
        return tree;
    }

    std::vector<std::pair<int, int>> el;
    el.reserve(m);
    for (const Edge& e : g.edges()) el.emplace_back(e.tail, e.head);
    detail::TriconnectedComponents tc;
    run_with_large_stack([&] { tc = detail::triconnected_components(n, el); });

    std::vector<int> rank(n);
    {
        auto topo = topological_order(g);
        for (int i = 0; i < n; ++i) rank[topo[i]] = i;
    }

    const int nc = static_cast<int>(tc.components.size());
    const int ne = static_cast<int>(tc.edges.size());
    std::vector<std::vector<int>> comps_of_edge(ne);
    std::vector<std::vector<Vertex>> comp_vertices(nc);
    for (int c = 0; c < nc; ++c) {
        auto& vs = comp_vertices[c];
        for (int e : tc.components[c].edges) {
            comps_of_edge[e].push_back(c);
            vs.push_back(tc.edges[e].u);
            vs.push_back(tc.edges[e].v);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }
    int root_comp = kNone;
    for (int e = 0; e < ne; ++e)
        if (tc.edges[e].real == *ref) root_comp = comps_of_edge[e].at(0);

    auto oriented = [&](int a, int b) { return rank[a] < rank[b] ? std::pair{a, b} : std::pair{b, a}; };
    auto child_key = [&](int c, Vertex a, Vertex b) {
        Vertex inner = n;
        for (Vertex v : comp_vertices[c])
            if (v != a && v != b) inner = std::min(inner, v);
        return inner;
    };

    // BFS over components; Q children are created when their parent is expanded.
    struct Pending {
        int comp;
        int parent_node;
        int via_edge;  // tc edge joining to the parent, -1 at the root
    };
    std::queue<Pending> queue;
    queue.push({root_comp, kNone, -1});
    while (!queue.empty()) {
        auto [c, parent_node, via] = queue.front();
        queue.pop();
        const auto& comp = tc.components[c];
        SpqrNode node;
        node.kind = comp.type == detail::CompType::Bond      ? NodeKind::P
                    : comp.type == detail::CompType::Polygon ? NodeKind::S
                                                             : NodeKind::R;
        node.parent = parent_node;
        if (via < 0) {
            node.s = s;
            node.t = t;
        } else {
            std::tie(node.s, node.t) = oriented(tc.edges[via].u, tc.edges[via].v);
        }
        node.vertices = comp_vertices[c];
        const int id = static_cast<int>(tree.nodes_.size());
        tree.nodes_.push_back(node);
        if (parent_node != kNone) {
            auto& pn = tree.nodes_[parent_node];
            pn.children.push_back(id);
            for (auto& se : pn.edges)
                if (se.child == -2 - via) se.child = id;
        }

        // child slots sorted deterministically
        struct Slot {
            Vertex tail, head, key;
            int tc_edge;
        };
        std::vector<Slot> slots;
        for (int e : comp.edges) {
            if (e == via) continue;
            const auto& te = tc.edges[e];
            if (te.real != kNone) {
                slots.push_back({g.edge(te.real).tail, g.edge(te.real).head, -1, e});
            } else {
                auto [a, b] = oriented(te.u, te.v);
                int other = comps_of_edge[e][0] == c ? comps_of_edge[e][1] : comps_of_edge[e][0];
                slots.push_back({a, b, child_key(other, a, b), e});
            }
        }
        std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) {
            return std::tie(x.tail, x.head, x.key, x.tc_edge) < std::tie(y.tail, y.head, y.key, y.tc_edge);
        });
        std::vector<SkeletonEdge> sk;
        if (via >= 0) {
            sk.push_back({node.s, node.t, kNone, kNone});
            tree.nodes_[id].parent_edge = 0;
        }
        for (const Slot& sl : slots) {
            const auto& te = tc.edges[sl.tc_edge];
            if (te.real != kNone) {
                sk.push_back({sl.tail, sl.head, kNone, te.real});
            } else {
                // placeholder resolved when the child is created
                sk.push_back({sl.tail, sl.head, -2 - sl.tc_edge, kNone});
                int other = comps_of_edge[sl.tc_edge][0] == c ? comps_of_edge[sl.tc_edge][1]
                                                               : comps_of_edge[sl.tc_edge][0];
                queue.push({other, id, sl.tc_edge});
            }
        }
        tree.nodes_[id].edges = std::move(sk);
        for (auto& se : tree.nodes_[id].edges) {
            if (se.real != kNone) {
                int q = make_q(se.real, id);
                se.child = q;
                tree.nodes_[id].children.push_back(q);
                if (se.real == *ref) tree.ref_q_ = q;
            }
        }
    }
    tree.root_ = 0;

    // Children listed in skeleton order so that numbering follows the sorted slots.
    for (auto& nd : tree.nodes_) {
        nd.children.clear();
        for (auto& se : nd.edges)
            if (!se.is_parent()) nd.children.push_back(se.child);
    }
    // Renumber into BFS order over the sorted children.
    std::vector<int> order{tree.root_}, newid(tree.nodes_.size(), kNone);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int ch : tree.nodes_[order[i]].children) order.push_back(ch);
    for (std::size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);
    std::vector<SpqrNode> renum(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        SpqrNode nd = std::move(tree.nodes_[order[i]]);
        if (nd.parent != kNone) nd.parent = newid[nd.parent];
        for (int& ch : nd.children) ch = newid[ch];
        for (auto& se : nd.edges)
            if (!se.is_parent()) se.child = newid[se.child];
        renum[i] = std::move(nd);
    }
    tree.nodes_ = std::move(renum);
    for (int& q : tree.q_of_edge_) q = newid[q];
    tree.ref_q_ = newid[tree.ref_q_];
    for (auto& nd : tree.nodes_)
        if (nd.kind == NodeKind::R) {
            DirectedGraph sk(static_cast<int>(nd.vertices.size()));
            for (const auto& se : nd.edges) sk.add_edge(nd.local(se.tail), nd.local(se.head));
            nd.rotation = planar_embed(sk).rotations();
        }
    return tree;
}

std::vector<EdgeId> pertinent_edges(const SpqrTree& tree, int node) {
    std::vector<EdgeId> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const auto& nd = tree.node(x);
        if (nd.kind == NodeKind::Q) out.push_back(nd.real);
        for (int ch : nd.children) stack.push_back(ch);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DirectedGraph pertinent_graph(const DirectedGraph& g, const SpqrTree& tree, int node, std::vector<Vertex>* ids,
                              std::vector<EdgeId>* edge_ids) {
    auto es = pertinent_edges(tree, node);
    std::vector<Vertex> vs;
    for (EdgeId e : es) {
        vs.push_back(g.edge(e).tail);
        vs.push_back(g.edge(e).head);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    DirectedGraph out;
    out.set_name(g.name() + "_pert" + std::to_string(node));
    for (Vertex v : vs) out.add_vertex(g.label(v));
    auto local = [&](Vertex v) { return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (EdgeId e : es) out.add_edge(local(g.edge(e).tail), local(g.edge(e).head), g.edge(e).augmented);
    if (ids) *ids = vs;
    if (edge_ids) *edge_ids = es;
    return out;
}

std::vector<std::vector<int>> rigid_rotation(const SpqrNode& node) {
    if (!node.rotation.empty()) return node.rotation;
    const auto& vs = node.vertices;
    auto local = [&](Vertex v) { return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    DirectedGraph sk(static_cast<int>(vs.size()));
    for (const auto& se : node.edges) sk.add_edge(local(se.tail), local(se.head));
    PlaneEmbedding emb = planar_embed(sk);
    return emb.rotations();
}

std::vector<std::vector<std::vector<int>>> skeleton_embeddings(const SpqrNode& node) {
    std::vector<std::vector<std::vector<int>>> out;
    const auto& vs = node.vertices;
    const int k = static_cast<int>(node.edges.size());
    auto local = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    switch (node.kind) {
        case NodeKind::Q: out.push_back({}); break;
        case NodeKind::S: {
            std::vector<std::vector<int>> rot(vs.size());
            for (int i = 0; i < k; ++i) {
                rot[local(node.edges[i].tail)].push_back(i);
                rot[local(node.edges[i].head)].push_back(i);
            }
            out.push_back(std::move(rot));
            break;
        }
        case NodeKind::R: {
            auto rot = rigid_rotation(node);
            auto mir = rot;
            for (auto& l : mir) std::reverse(l.begin(), l.end());
            out.push_back(std::move(rot));
            out.push_back(std::move(mir));
            break;
        }
        case NodeKind::P: {
            std::vector<int> kids;
            for (int i = 0; i < k; ++i)
                if (!node.edges[i].is_parent()) kids.push_back(i);
            for (std::size_t r = 0; r < kids.size(); ++r) {
                std::vector<int> at_s;
                if (node.parent_edge != kNone) at_s.push_back(node.parent_edge);
                for (std::size_t i = 0; i < kids.size(); ++i)
                    if (i != r) at_s.push_back(kids[i]);
                at_s.push_back(kids[r]);
                std::vector<int> at_t(at_s.rbegin(), at_s.rend());
                std::vector<std::vector<int>> rot(2);
                rot[local(node.s)] = at_s;
                rot[local(node.t)] = at_t;
                out.push_back(std::move(rot));
            }
            break;
        }
    }
    return out;
}

EmbeddingChoice default_choice(const SpqrTree& tree) {
    EmbeddingChoice c;
    c.order.resize(tree.size());
    c.mirror.assign(tree.size(), 0);
    for (int i = 0; i < tree.size(); ++i) {
        const auto& nd = tree.node(i);
        if (nd.kind != NodeKind::P) continue;
        for (int k = 0; k < static_cast<int>(nd.edges.size()); ++k)
            if (!nd.edges[k].is_parent()) c.order[i].push_back(k);
    }
    return c;
}

namespace {

struct Realizer {
    const DirectedGraph& g;
    const SpqrTree& tree;
    const EmbeddingChoice& choice;

    std::vector<int> rotation_at(int id, Vertex v) const {
        const auto& nd = tree.node(id);
        const int li = nd.local(v);
        std::vector<int> out;
        switch (nd.kind) {
            case NodeKind::R:
                out = nd.rotation[li];
                if (choice.mirror[id]) std::reverse(out.begin(), out.end());
                break;
            case NodeKind::P:
                if (nd.parent_edge != kNone) out.push_back(nd.parent_edge);
                out.insert(out.end(), choice.order[id].begin(), choice.order[id].end());
                if (v == nd.t) std::reverse(out.begin(), out.end());
                break;
            case NodeKind::S:
                for (int k = 0; k < static_cast<int>(nd.edges.size()); ++k)
                    if (nd.edges[k].tail == v || nd.edges[k].head == v) out.push_back(k);
                break;
            case NodeKind::Q: break;
        }
        return out;
    }

    void expand(int id, Vertex v, std::vector<EdgeId>& out) const {
        const auto& nd = tree.node(id);
        auto rot = rotation_at(id, v);
        std::size_t start = 0;
        if (nd.parent_edge != kNone && (v == nd.s || v == nd.t)) {
            auto it = std::find(rot.begin(), rot.end(), nd.parent_edge);
            start = static_cast<std::size_t>(it - rot.begin()) + 1;
        }
        for (std::size_t k = 0; k < rot.size(); ++k) {
            int idx = rot[(start + k) % rot.size()];
            if (idx == nd.parent_edge) continue;
            const auto& se = nd.edges[idx];
            if (se.real != kNone)
                out.push_back(se.real);
            else
                expand(se.child, v, out);
        }
    }
};

}  // namespace

PlaneEmbedding realize_embedding(const DirectedGraph& g, const SpqrTree& tree, const EmbeddingChoice& choice) {
    const int n = g.num_vertices();
    std::vector<std::vector<EdgeId>> rot(n);
    const auto& root = tree.node(tree.root());
    if (root.kind == NodeKind::Q) {
        rot[root.s] = {root.real};
        rot[root.t] = {root.real};
        return PlaneEmbedding(g, std::move(rot));
    }
    std::vector<int> home(n, kNone);
    for (int i = 0; i < tree.size(); ++i) {
        if (tree.node(i).kind == NodeKind::Q) continue;
        for (Vertex v : tree.node(i).vertices)
            if (home[v] == kNone) home[v] = i;
    }
    Realizer r{g, tree, choice};
    auto work = [&] {
        for (Vertex v = 0; v < n; ++v) r.expand(home[v], v, rot[v]);
    };
    if (tree.size() > 4096)
        run_with_large_stack(work);
    else
        work();

    // rotate the source's list so that it begins with its first successor
    const Vertex s = root.s;
    auto& rs = rot[s];
    EdgeId first = kNone;
    const EdgeId st = tree.node(tree.reference_q()).real;
    if (root.kind == NodeKind::P) {
        const auto& se = root.edges[choice.order[tree.root()].front()];
        if (se.real != kNone) {
            first = se.real;
        } else {
            std::vector<EdgeId> sub;
            r.expand(se.child, s, sub);
            first = sub.front();
        }
    } else if (choice.st_first) {
        first = st;
    } else {
        auto it = std::find(rs.begin(), rs.end(), st);
        first = (it + 1 == rs.end()) ? rs.front() : *(it + 1);
    }
    std::rotate(rs.begin(), std::find(rs.begin(), rs.end(), first), rs.end());
    PlaneEmbedding emb(g, std::move(rot));
    if (!emb.satisfies_euler()) throw EmbeddingInvalid("assembled rotation is not planar");
    emb.set_outer_face(emb.face_of_angle(s, static_cast<int>(emb.rotation(s).size()) - 1));
    return emb;
}

std::string to_debug_string(const DirectedGraph& g, const SpqrTree& tree) {
    std::ostringstream os;
    auto name = [&](Vertex v) { return g.label(v); };
    std::vector<std::pair<int, int>> stack{{tree.root(), 0}};
    while (!stack.empty()) {
        auto [x, depth] = stack.back();
        stack.pop_back();
        const auto& nd = tree.node(x);
        std::string ind(2 * static_cast<std::size_t>(depth), ' ');
        os << ind << "node " << x << ' ' << kind_char(nd.kind) << " poles " << name(nd.s) << ' ' << name(nd.t) << '\n';
        for (const auto& se : nd.edges) {
            os << ind << "  " << name(se.tail) << "->" << name(se.head);
            if (se.is_parent())
                os << " parent";
            else if (se.real != kNone)
                os << " real q" << se.child;
            else
                os << " virtual n" << se.child;
            os << '\n';
        }
        for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
            if (tree.node(*it).kind != NodeKind::Q) stack.push_back({*it, depth + 1});
    }
    return os.str();
}

}  // namespace lplanar
