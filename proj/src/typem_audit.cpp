#include <algorithm>

#include "lplanar/oracle.hpp"
#include "lplanar/variable.hpp"

namespace lplanar {

bool oracle_type_m(const DirectedGraph& pert, Mode mode) {
    StReport rep = validate_st_graph(pert);
    if (!rep.ok) throw NotStGraph();
    const Vertex s = *rep.source;
    std::vector<ListRule> rules(pert.num_vertices(), mode == Mode::Bitonic ? ListRule::Bitonic : ListRule::Decreasing);
    bool found = false;
    for_each_upward_embedding(pert, [&](const PlaneEmbedding& emb) {
        rules[s] = ListRule::Decreasing;
        if (search_fixed_ordering(pert, emb, rules)) found = true;
        if (!found && mode == Mode::Bitonic) {
            rules[s] = ListRule::Increasing;
            if (search_fixed_ordering(pert, emb, rules)) found = true;
        }
        return !found;
    });
    return found;
}

TypeMAudit audit_type_m(const VariableResult& r, Mode mode, int max_vertices, TypeMCache* cache) {
    TypeMAudit out;
    if (r.tree.size() == 0) return out;
    const SpqrTree& tree = r.tree;
    for (int id : tree.postorder()) {
        const SpqrNode& nd = tree.node(id);
        bool last = !r.accepted && id == r.reject_node;
        if (nd.kind != NodeKind::Q && id != tree.root()) {
            DirectedGraph pert = pertinent_graph(r.processed, tree, id);
            if (pert.num_vertices() <= max_vertices) {
                std::vector<std::pair<int, int>> key;
                for (const Edge& e : pert.edges()) key.emplace_back(e.tail, e.head);
                std::sort(key.begin(), key.end());
                key.emplace_back(-1, static_cast<int>(mode));
                bool want;
                auto it = cache ? cache->find(key) : TypeMCache::iterator{};
                if (cache && it != cache->end()) {
                    want = it->second;
                } else {
                    want = oracle_type_m(pert, mode);
                    if (cache) cache->emplace(std::move(key), want);
                }
                ++out.checked;
                if (want) ++out.oracle_m;
                if (want && !set_has_type_m(r.node_sets[id])) {
                    ++out.violations;
                    out.bad_nodes.push_back(id);
                }
            }
        }
        if (last) break;
    }
    return out;
}

}  // namespace lplanar
