#include "lplanar/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace lplanar {

PlaneEmbedding::PlaneEmbedding(const DirectedGraph& g, std::vector<std::vector<EdgeId>> rotation)
    : ends_(g.edges()), rot_(std::move(rotation)) {
    const int m = g.num_edges();
    if (static_cast<int>(rot_.size()) != g.num_vertices()) throw EmbeddingInvalid("rotation size mismatch");
    pos_tail_.assign(m, -1);
    pos_head_.assign(m, -1);
    for (Vertex v = 0; v < num_vertices(); ++v) {
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            EdgeId e = rot_[v][i];
            if (e < 0 || e >= m) throw EmbeddingInvalid("unknown edge in rotation");
            if (ends_[e].tail != v && ends_[e].head != v) throw EmbeddingInvalid("edge not incident to rotation owner");
            int& slot = ends_[e].tail == v ? pos_tail_[e] : pos_head_[e];
            if (slot != -1) throw EmbeddingInvalid("edge repeated in rotation");
            slot = i;
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (pos_tail_[e] < 0 || pos_head_[e] < 0) throw EmbeddingInvalid("edge missing from rotation");
    trace_faces();
}

int PlaneEmbedding::position(Vertex v, EdgeId e) const {
    if (ends_[e].tail == v) return pos_tail_[e];
    return pos_head_[e];
}

Dart PlaneEmbedding::next_dart(Dart d) const {
    Vertex v = dart_target(d);
    EdgeId e = dart_edge(d);
    const auto& r = rot_[v];
    EdgeId f = r[(position(v, e) + 1) % r.size()];
    return dart_of(f, ends_[f].tail == v);
}

void PlaneEmbedding::trace_faces() {
    const int darts = 2 * num_edges();
    face_of_dart_.assign(darts, -1);
    faces_.clear();
    for (Dart d0 = 0; d0 < darts; ++d0) {
        if (face_of_dart_[d0] != -1) continue;
        int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        for (Dart d = d0; face_of_dart_[d] == -1; d = next_dart(d)) {
            face_of_dart_[d] = f;
            faces_[f].push_back(d);
        }
    }
    outer_ = 0;
}

int PlaneEmbedding::face_of_angle(Vertex v, int i) const {
    EdgeId e = rot_[v][i];
    return face_of_dart_[dart_of(e, ends_[e].head == v)];
}

int PlaneEmbedding::angle_on_face(Vertex v, int f) const {
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
        if (face_of_angle(v, i) == f) return i;
    return -1;
}

void PlaneEmbedding::set_outer_face(int f) {
    if (f < 0 || (f >= num_faces() && !(num_faces() == 0 && f == 0))) throw EmbeddingInvalid("outer face out of range");
    outer_ = f;
}

bool PlaneEmbedding::satisfies_euler() const {
    const int n = num_vertices();
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const Edge& e : ends_) comp[find(e.tail)] = find(e.head);
    std::vector<long> chi(n, 0);
    for (Vertex v = 0; v < n; ++v) chi[find(v)] += 1;
    for (const Edge& e : ends_) chi[find(e.tail)] -= 1;
    for (const auto& f : faces_) chi[find(dart_origin(f.front()))] += 1;
    for (Vertex v = 0; v < n; ++v) {
        if (find(v) != v) continue;
        // An isolated vertex has no darts; count its single face implicitly.
        long expect = rot_[v].empty() && chi[v] == 1 ? 1 : 2;
        if (chi[v] != expect) return false;
    }
    return true;
}

PlaneEmbedding PlaneEmbedding::mirrored() const {
    PlaneEmbedding m;
    m.ends_ = ends_;
    m.rot_ = rot_;
    for (auto& r : m.rot_) std::reverse(r.begin(), r.end());
    m.pos_tail_.assign(ends_.size(), -1);
    m.pos_head_.assign(ends_.size(), -1);
    for (Vertex v = 0; v < m.num_vertices(); ++v)
        for (int i = 0; i < static_cast<int>(m.rot_[v].size()); ++i) {
            EdgeId e = m.rot_[v][i];
            (ends_[e].tail == v ? m.pos_tail_[e] : m.pos_head_[e]) = i;
        }
    m.trace_faces();
    // The mirror of face f is traced by the twins of f's darts.
    if (!faces_.empty()) m.outer_ = m.face_of_dart_[dart_twin(faces_[outer_].front())];
    return m;
}

std::vector<EdgeId> successor_edges(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v) {
    const auto& r = emb.rotation(v);
    const int d = static_cast<int>(r.size());
    std::vector<EdgeId> out;
    if (g.out_degree(v) == 0) return out;
    int start = -1;
    if (g.in_degree(v) == 0) {
        int a = emb.angle_on_face(v, emb.outer_face());
        if (a < 0) throw EmbeddingInvalid("source not on the outer face");
        start = (a + 1) % d;
    } else {
        for (int i = 0; i < d; ++i) {
            bool prev_in = g.edge(r[(i + d - 1) % d]).head == v;
            bool cur_out = g.edge(r[i]).tail == v;
            if (prev_in && cur_out) {
                if (start != -1) throw NotBimodalAtVertex(v);
                start = i;
            }
        }
    }
    for (int k = 0; k < d; ++k) {
        EdgeId e = r[(start + k) % d];
        if (g.edge(e).tail != v) break;
        out.push_back(e);
    }
    if (static_cast<int>(out.size()) != g.out_degree(v)) throw NotBimodalAtVertex(v);
    return out;
}

std::vector<Vertex> successor_list(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v) {
    std::vector<Vertex> s;
    for (EdgeId e : successor_edges(g, emb, v)) s.push_back(g.edge(e).head);
    return s;
}

int modality(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v) {
    const auto& r = emb.rotation(v);
    const int d = static_cast<int>(r.size());
    if (d < 2) return 0;
    int k = 0;
    for (int i = 0; i < d; ++i) {
        bool a = g.edge(r[i]).tail == v;
        bool b = g.edge(r[(i + 1) % d]).tail == v;
        if (a != b) ++k;
    }
    return k;
}

int max_modality(const DirectedGraph& g, const PlaneEmbedding& emb) {
    int k = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) k = std::max(k, modality(g, emb, v));
    return k;
}

bool is_valid_embedding(const DirectedGraph& g, const PlaneEmbedding& emb) {
    if (emb.num_vertices() != g.num_vertices() || emb.num_edges() != g.num_edges()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (static_cast<int>(emb.rotation(v).size()) != g.degree(v)) return false;
    return emb.satisfies_euler();
}

bool is_upward_embedding(const DirectedGraph& g, const PlaneEmbedding& emb) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok || !is_valid_embedding(g, emb)) return false;
    if (g.num_vertices() == 1) return true;
    if (emb.angle_on_face(*rep.source, emb.outer_face()) < 0) return false;
    if (emb.angle_on_face(*rep.sink, emb.outer_face()) < 0) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (modality(g, emb, v) > 2) return false;
    return true;
}

}  // namespace lplanar

namespace lplanar {

PlaneEmbedding embedding_from_successor_lists(const DirectedGraph& g, const std::vector<std::vector<Vertex>>& lists) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    const int n = g.num_vertices(), m = g.num_edges();
    if (static_cast<int>(lists.size()) != n) throw EmbeddingInvalid("one successor list per vertex required");
    std::vector<std::vector<EdgeId>> out(n);
    for (Vertex v = 0; v < n; ++v) {
        if (static_cast<int>(lists[v].size()) != g.out_degree(v))
            throw EmbeddingInvalid("successor list of " + g.label(v) + " has wrong length");
        for (Vertex w : lists[v]) {
            auto e = g.find_edge(v, w);
            if (!e) throw EmbeddingInvalid("successor list of " + g.label(v) + " names a non-successor");
            out[v].push_back(*e);
        }
        std::vector<EdgeId> chk = out[v];
        std::sort(chk.begin(), chk.end());
        if (std::adjacent_find(chk.begin(), chk.end()) != chk.end())
            throw EmbeddingInvalid("successor list of " + g.label(v) + " repeats a vertex");
    }
    // Frontier of cut edges as a doubly linked list, left to right.
    std::vector<EdgeId> left(m, kNone), right(m, kNone);
    std::vector<char> active(m, 0);
    std::vector<std::vector<EdgeId>> rot(n);
    auto splice_out = [&](Vertex v, EdgeId l, EdgeId r) {
        EdgeId prev = kNone;
        for (EdgeId e : out[v]) {
            active[e] = 1;
            left[e] = prev;
            if (prev != kNone) right[prev] = e;
            prev = e;
        }
        if (out[v].empty()) {
            if (l != kNone) right[l] = r;
            if (r != kNone) left[r] = l;
            return;
        }
        left[out[v].front()] = l;
        if (l != kNone) right[l] = out[v].front();
        right[out[v].back()] = r;
        if (r != kNone) left[r] = out[v].back();
    };
    for (Vertex v : topological_order(g)) {
        rot[v] = out[v];
        if (g.in_degree(v) == 0) {
            splice_out(v, kNone, kNone);
            continue;
        }
        EdgeId a = g.in_edges(v).front();
        auto into_v = [&](EdgeId e) { return e != kNone && active[e] && g.edge(e).head == v; };
        EdgeId lo = a, hi = a;
        while (into_v(left[lo])) lo = left[lo];
        while (into_v(right[hi])) hi = right[hi];
        std::vector<EdgeId> ins;
        for (EdgeId e = lo;; e = right[e]) {
            ins.push_back(e);
            if (e == hi) break;
        }
        if (static_cast<int>(ins.size()) != g.in_degree(v))
            throw EmbeddingInvalid("incoming edges of " + g.label(v) + " are not contiguous");
        for (auto it = ins.rbegin(); it != ins.rend(); ++it) rot[v].push_back(*it);
        for (EdgeId e : ins) active[e] = 0;
        splice_out(v, left[lo], right[hi]);
    }
    PlaneEmbedding emb(g, std::move(rot));
    if (n > 1) {
        Vertex s = *rep.source;
        emb.set_outer_face(emb.face_of_angle(s, g.out_degree(s) - 1));
    }
    if (!emb.satisfies_euler()) throw EmbeddingInvalid("successor lists do not describe a planar embedding");
    return emb;
}

}  // namespace lplanar
