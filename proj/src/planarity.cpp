#include "lplanar/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <map>

namespace lplanar {
namespace {

using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;
using UEdge = boost::graph_traits<UGraph>::edge_descriptor;

struct Underlying {
    UGraph ug;
    std::vector<EdgeId> primary;  // underlying edge index -> edge id
    std::vector<EdgeId> twin;     // -1 or the antiparallel partner
};

Underlying build_underlying(const DirectedGraph& g) {
    Underlying u;
    u.ug = UGraph(g.num_vertices());
    std::map<std::pair<Vertex, Vertex>, int> seen;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        Vertex a = g.edge(e).tail, b = g.edge(e).head;
        auto key = std::minmax(a, b);
        auto it = seen.find(key);
        if (it != seen.end()) {
            u.twin[it->second] = e;
            continue;
        }
        int idx = static_cast<int>(u.primary.size());
        seen.emplace(key, idx);
        boost::add_edge(a, b, idx, u.ug);
        u.primary.push_back(e);
        u.twin.push_back(-1);
    }
    return u;
}

}  // namespace

bool is_planar(const DirectedGraph& g) {
    Underlying u = build_underlying(g);
    return boost::boyer_myrvold_planarity_test(u.ug);
}

PlaneEmbedding planar_embed(const DirectedGraph& g) {
    Underlying u = build_underlying(g);
    using Emb = std::vector<std::vector<UEdge>>;
    Emb emb(g.num_vertices());
    std::vector<UEdge> kur;
    auto index = get(boost::edge_index, u.ug);
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = u.ug,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), get(boost::vertex_index, u.ug)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    if (!ok) {
        std::vector<EdgeId> w;
        for (const UEdge& e : kur) w.push_back(u.primary[index[e]]);
        std::sort(w.begin(), w.end());
        throw NotPlanar(std::move(w));
    }
    std::vector<std::vector<EdgeId>> rot(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (const UEdge& ue : emb[v]) {
            int i = index[ue];
            EdgeId e = u.primary[i], t = u.twin[i];
            bool low = v == std::min(g.edge(e).tail, g.edge(e).head);
            if (t >= 0 && low) rot[v].push_back(t);
            rot[v].push_back(e);
            if (t >= 0 && !low) rot[v].push_back(t);
        }
    }
    PlaneEmbedding pe(g, std::move(rot));
    if (!pe.satisfies_euler()) throw EmbeddingInvalid("internal: planar embedding failed Euler check");
    return pe;
}

PlaneEmbedding embed_upward(const DirectedGraph& g) {
    StReport rep = validate_st_graph(g);
    if (!rep.ok) throw NotStGraph();
    Vertex s = *rep.source, t = *rep.sink;
    if (s == t) return PlaneEmbedding(g, std::vector<std::vector<EdgeId>>(g.num_vertices()));
    DirectedGraph h = g;
    EdgeId st = kNone;
    if (auto e = g.find_edge(s, t)) {
        st = *e;
    } else {
        st = h.add_edge(s, t, true);
    }
    PlaneEmbedding he;
    try {
        he = planar_embed(h);
    } catch (const NotPlanar&) {
        throw NoUpwardEmbedding();
    }
    // Choose the face on one side of (s,t); it contains both poles.
    Dart d = dart_of(st, true);
    if (st < g.num_edges()) {
        PlaneEmbedding out(g, he.rotations());
        out.set_outer_face(out.face_of_dart(d));
        return out;
    }
    std::vector<std::vector<EdgeId>> rot = he.rotations();
    int sp = he.position(s, st);
    // After removal, the angle preceding (s,t) at s merges with the one after it.
    EdgeId before = rot[s][(sp + rot[s].size() - 1) % rot[s].size()];
    for (auto& r : rot) r.erase(std::remove(r.begin(), r.end(), st), r.end());
    PlaneEmbedding out(g, std::move(rot));
    out.set_outer_face(out.face_of_angle(s, out.position(s, before)));
    return out;
}

}  // namespace lplanar
