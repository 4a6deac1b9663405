#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/spqr.hpp"

using namespace lplanar;
using namespace lplanar::testing;

namespace {
std::set<EmbeddingKey> keys(const std::vector<PlaneEmbedding>& es) {
    std::set<EmbeddingKey> out;
    for (const auto& e : es) out.insert(embedding_key(e));
    return out;
}

void compare_generators(const DirectedGraph& g) {
    auto a = enumerate_upward_embeddings(g);
    auto b = enumerate_upward_embeddings_bruteforce(g);
    auto ka = keys(a), kb = keys(b);
    CHECK(ka.size() == a.size());  // no duplicates from the tree generator
    CHECK(ka == kb);
    for (const auto& e : a) CHECK(is_upward_embedding(g, e));
}
}  // namespace

TEST_CASE("tree-based and rotation-filter embedding generators agree on small graphs") {
    for (int n = 2; n <= 6; ++n) for_each_small_st_graph(n, [](const DirectedGraph& g) { compare_generators(g); });
}

TEST_CASE("embedding generators agree on fixtures") {
    compare_generators(diamond());
    compare_generators(k4());
    compare_generators(octahedron());
    auto d = diamond();
    d.add_edge(0, 3);
    compare_generators(d);
}

TEST_CASE("embedding generators agree on random graphs") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 60; ++it) {
        int n = 5 + static_cast<int>(rng() % 3);
        compare_generators(random_planar_st_graph(n, rng, (rng() % 100) / 100.0));
    }
}
