#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "lplanar/oracle.hpp"
#include "lplanar/planarity.hpp"
#include "lplanar/spqr.hpp"

namespace lplanar {

EmbeddingKey embedding_key(const PlaneEmbedding& emb) {
    EmbeddingKey k;
    k.rotation = emb.rotations();
    for (auto& l : k.rotation)
        if (!l.empty()) std::rotate(l.begin(), std::min_element(l.begin(), l.end()), l.end());
    if (emb.num_faces() > 0) k.outer = emb.face(emb.outer_face());
    std::sort(k.outer.begin(), k.outer.end());
    return k;
}

void for_each_upward_embedding(const DirectedGraph& g, const std::function<bool(const PlaneEmbedding&)>& f,
                               const EnumerationBudget& budget) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    const Vertex s = *rep.source, t = *rep.sink;
    if (g.num_vertices() == 1) {
        f(PlaneEmbedding(g, std::vector<std::vector<EdgeId>>(1)));
        return;
    }
    const bool had_st = g.has_edge(s, t);
    DirectedGraph h = g;
    if (!had_st) h.add_edge(s, t);
    if (!is_planar(h)) {
        if (!is_planar(g)) planar_embed(g);  // throws with a witness
        return;  // s and t never share a face
    }
    const EdgeId st = *h.find_edge(s, t);
    SpqrTree tree = build_spqr(h, s, t);
    EmbeddingChoice choice = default_choice(tree);

    const auto start = std::chrono::steady_clock::now();
    std::uint64_t produced = 0;
    std::vector<int> dims;
    for (int i = 0; i < tree.size(); ++i) {
        auto k = tree.node(i).kind;
        if (k == NodeKind::P || k == NodeKind::R) dims.push_back(i);
    }
    const int root = tree.root();
    const auto root_kind = tree.node(root).kind;
    if (root_kind == NodeKind::P && !had_st) {
        // one representative per cyclic order: the (s,t) child first
        auto& ord = choice.order[root];
        auto it = std::find_if(ord.begin(), ord.end(), [&](int e) { return tree.node(root).edges[e].real == st; });
        std::rotate(ord.begin(), it, it + 1);
    }

    bool stop = false;
    auto emit = [&] {
        PlaneEmbedding emb = realize_embedding(h, tree, choice);
        if (++produced > budget.max_embeddings) throw BudgetExceeded("embedding count");
        if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.max_seconds)
            throw BudgetExceeded("time");
        if (had_st) {
            stop = !f(emb);
            return;
        }
        auto rot = emb.rotations();
        for (auto& l : rot) std::erase(l, st);
        PlaneEmbedding e2(g, std::move(rot));
        e2.set_outer_face(e2.face_of_angle(s, static_cast<int>(e2.rotation(s).size()) - 1));
        stop = !f(e2);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t d) {
        if (stop) return;
        if (d == dims.size()) {
            if (had_st && (root_kind == NodeKind::S || root_kind == NodeKind::R)) {
                choice.st_first = true;
                emit();
                if (stop) return;
                choice.st_first = false;
                emit();
            } else {
                choice.st_first = true;
                emit();
            }
            return;
        }
        const int id = dims[d];
        if (tree.node(id).kind == NodeKind::R) {
            for (char m : {0, 1}) {
                choice.mirror[id] = m;
                rec(d + 1);
                if (stop) return;
            }
            choice.mirror[id] = 0;
            return;
        }
        auto& ord = choice.order[id];
        auto first = ord.begin();
        if (id == root && !had_st) ++first;
        std::sort(first, ord.end());
        do {
            rec(d + 1);
            if (stop) return;
        } while (std::next_permutation(first, ord.end()));
    };
    rec(0);
}

std::vector<PlaneEmbedding> enumerate_upward_embeddings(const DirectedGraph& g, const EnumerationBudget& budget) {
    std::vector<PlaneEmbedding> out;
    for_each_upward_embedding(
        g,
        [&](const PlaneEmbedding& e) {
            out.push_back(e);
            return true;
        },
        budget);
    return out;
}

}  // namespace lplanar
