#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <random>
#include <vector>

#include "lplanar/bitonic.hpp"
#include "lplanar/embedding.hpp"
#include "lplanar/ldraw.hpp"

namespace lplanar {

struct EnumerationBudget {
    int max_vertices = 14;
    int max_edges = 40;
    std::uint64_t max_embeddings = 2'000'000;
    double max_seconds = 600.0;
};

class BudgetExceeded : public GraphError {
public:
    explicit BudgetExceeded(const std::string& what) : GraphError("enumeration budget exceeded: " + what) {}
};

// Calls f for every topological order (as a rank vector); f returns false to stop.
void enumerate_st_orderings(const DirectedGraph& g, const std::function<bool(const StOrdering&)>& f,
                            const EnumerationBudget& budget = {});
// Linear-extension count by subset dynamic programming.
std::uint64_t count_linear_extensions(const DirectedGraph& g);

// Exhaustive search over down-sets for an ordering that makes every successor list valid.
std::optional<StOrdering> search_fixed_ordering(const DirectedGraph& g, const PlaneEmbedding& emb, Mode mode);
enum class ListRule { Bitonic, Decreasing, Increasing };
std::optional<StOrdering> search_fixed_ordering(const DirectedGraph& g, const PlaneEmbedding& emb,
                                                const std::vector<ListRule>& rules);

// Identity of a plane embedding: rotations normalised to start at their smallest edge,
// plus the dart set of the outer face.
struct EmbeddingKey {
    std::vector<std::vector<EdgeId>> rotation;
    std::vector<Dart> outer;
    auto operator<=>(const EmbeddingKey&) const = default;
};
EmbeddingKey embedding_key(const PlaneEmbedding& emb);

// Streams the embeddings of enumerate_upward_embeddings; f returns false to stop.
void for_each_upward_embedding(const DirectedGraph& g, const std::function<bool(const PlaneEmbedding&)>& f,
                               const EnumerationBudget& budget = {});

// All (rotation system, outer face) pairs of an st-graph with s and t on the outer face,
// via the decomposition tree.
std::vector<PlaneEmbedding> enumerate_upward_embeddings(const DirectedGraph& g, const EnumerationBudget& budget = {});
// Same set by filtering every rotation system (small graphs only).
std::vector<PlaneEmbedding> enumerate_upward_embeddings_bruteforce(const DirectedGraph& g,
                                                                   const EnumerationBudget& budget = {});
// Every rotation system of g that is planar, each with every face as outer face.
void enumerate_plane_embeddings(const DirectedGraph& g, const std::function<bool(const PlaneEmbedding&)>& f,
                                const EnumerationBudget& budget = {});

struct PairResult {
    bool found = false;
    PlaneEmbedding embedding;
    StOrdering pi;
};

PairResult brute_force_pair(const DirectedGraph& g, Mode mode, const EnumerationBudget& budget = {});
inline PairResult brute_force_bitonic_pair(const DirectedGraph& g, const EnumerationBudget& b = {}) {
    return brute_force_pair(g, Mode::Bitonic, b);
}
inline PairResult brute_force_monotone_pair(const DirectedGraph& g, const EnumerationBudget& b = {}) {
    return brute_force_pair(g, Mode::Monotone, b);
}

// Minimum over planar embeddings of the maximum vertex modality.
int min_modality_over_embeddings(const DirectedGraph& g, const EnumerationBudget& budget = {});

// Rank-space search for an upward (optionally rightward) planar L-drawing: y runs over
// topological orders, x over permutations built left to right with crossing pruning.
std::optional<LDrawing> brute_force_upward_ldrawing(const DirectedGraph& g, bool rightward = false,
                                                    const EnumerationBudget& budget = {});
// Every (embedding, port labeling code) realized by a planar L-drawing in rank space, i.e.
// over all pairs of x and y permutations. Connected graphs, n <= 6.
std::set<std::pair<EmbeddingKey, std::uint64_t>> realized_port_labelings(const DirectedGraph& g);

bool brute_force_upward_ldrawing_exists(const DirectedGraph& g, bool rightward = false,
                                        const EnumerationBudget& budget = {});

// Canonical form under vertex relabeling (small n); used as a cache key only.
std::vector<std::uint64_t> canonical_form(const DirectedGraph& g);

// All st-graphs on n vertices with edges i->j only for i<j, source 0, sink n-1, s and t cofacial.
void for_each_small_st_graph(int n, const std::function<void(const DirectedGraph&)>& f);

// Connected planar digraphs on n vertices with at most max_edges edges and no antiparallel
// pairs, one per isomorphism class.
void for_each_connected_planar_digraph(int n, int max_edges, const std::function<void(const DirectedGraph&)>& f);

// Random planar st-graph on n vertices (seeded), grown by edge insertion inside faces.
DirectedGraph random_planar_st_graph(int n, std::mt19937_64& rng, double density = 0.5, bool allow_st_edge = true);

// Same family grown face by face in near-linear time.
DirectedGraph random_large_planar_st_graph(int n, std::mt19937_64& rng, double density = 0.3);

// Random series-parallel st-graph with about n vertices.
DirectedGraph random_series_parallel(int n, std::mt19937_64& rng);

}  // namespace lplanar
