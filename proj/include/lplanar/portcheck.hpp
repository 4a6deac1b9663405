#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lplanar/embedding.hpp"
#include "lplanar/ldraw.hpp"

namespace lplanar {

// out[e] is Top or Bottom (port at the tail), in[e] is Left or Right (port at the head).
struct PortLabeling {
    std::vector<Port> out, in;
};
// Two bits per edge: bit 0 set for bottom, bit 1 set for right.
PortLabeling labeling_from_code(int m, std::uint64_t code);
std::uint64_t labeling_code(const PortLabeling& l);
PortLabeling labeling_of(const DirectedGraph& g, const LDrawing& d);

enum class PortFailure { None, CyclicOrder, AngleSum, FaceEquation, DoubleAssignment, MatchingFail };
const char* failure_name(PortFailure f);

// Angles in quarter turns, indexed like PlaneEmbedding angles: angle[v][i] lies between
// rot[v][i] and rot[v][i+1]. x_vf follows from it: a = 2x for two edges of one direction,
// a = 2x+1 otherwise. Each bend is convex in convex_face[e] and assigned to owner[e] or to nobody.
struct AngleWitness {
    std::vector<std::vector<int>> angle;
    std::vector<std::vector<int>> x_vf;
    std::vector<int> convex_face;
    std::vector<Vertex> owner;
};

struct PortCheckResult {
    bool feasible = false;
    PortFailure reason = PortFailure::None;
    Vertex vertex = kNone;
    int face = kNone;
    EdgeId edge = kNone;
    AngleWitness witness;
    std::string message;
};

// Turn of edge e seen from endpoint v: true when it peels off clockwise.
bool turns_clockwise(const DirectedGraph& g, const PortLabeling& l, EdgeId e, Vertex v);
Port port_at(const DirectedGraph& g, const PortLabeling& l, EdgeId e, Vertex v);

PortCheckResult check_port_feasibility(const DirectedGraph& g, const PlaneEmbedding& emb, const PortLabeling& l);

// Re-checks the four conditions from scratch on a witness.
bool witness_to_partial_drawing_check(const DirectedGraph& g, const PlaneEmbedding& emb, const PortLabeling& l,
                                      const AngleWitness& w, std::string* why = nullptr);

// Exhaustive search over angles and bend owners (small graphs only).
bool brute_force_port_feasibility(const DirectedGraph& g, const PlaneEmbedding& emb, const PortLabeling& l,
                                  AngleWitness* found = nullptr);

// Text format: "e <u> <v> out=<top|bottom> in=<left|right>" per edge.
std::string write_labels(const DirectedGraph& g, const PortLabeling& l);
PortLabeling parse_labels(const DirectedGraph& g, const std::string& text, const std::string& source = "<input>");

}  // namespace lplanar
