#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lplanar/bitonic.hpp"
#include "lplanar/spqr.hpp"

namespace lplanar {

// Pattern of the signs between consecutive successors of a node's source inside its
// pertinent graph: + when the left one must precede, - when the right one must.
enum class SignClass { Zero, Plus, Minus, Both };

enum class RejectReason { None, TwoTypeB, TypeBWithStEdge, RigidFan, RootList, PolesNotCofacial };
const char* reason_name(RejectReason r);

struct NodeTrace {
    int node = kNone;
    NodeKind kind = NodeKind::Q;
    Vertex s = kNone, t = kNone;
    bool type_m = true;
    SignClass sign_class = SignClass::Zero;
    std::vector<Vertex> firsts;  // one (type M) or two (type B)
    Vertex last = kNone;         // type M only
    bool mirror = false;         // R nodes
    std::vector<std::pair<Vertex, Vertex>> added_edges;
};

struct VariableResult {
    bool accepted = false;
    PlaneEmbedding embedding;  // of the input graph
    StOrdering pi;
    std::vector<std::pair<Vertex, Vertex>> added_edges;  // G* minus G

    // Diagnostics from the decomposition actually processed (the input, or the input
    // plus a new source when (s,t) was missing).
    DirectedGraph processed;
    SpqrTree tree;
    std::vector<std::uint16_t> node_sets;  // bit i: summary code i achievable
    std::vector<NodeTrace> trace;          // filled when requested and accepted

    RejectReason reason = RejectReason::None;
    int reject_node = kNone;
    Vertex reject_vertex = kNone;
    std::string message;
};

// Summary code helpers (code = class | first_is_tip << 2 | last_is_tip << 3).
inline SignClass code_class(int code) { return static_cast<SignClass>(code & 3); }
inline bool code_type_m(int code) { return (code & 3) != 3; }
bool set_has_type_m(std::uint16_t set);

VariableResult test_variable(const DirectedGraph& g, Mode mode, bool with_trace = false);
inline VariableResult test_bitonic_variable(const DirectedGraph& g, bool with_trace = false) {
    return test_variable(g, Mode::Bitonic, with_trace);
}
inline VariableResult test_monotone_variable(const DirectedGraph& g, bool with_trace = false) {
    return test_variable(g, Mode::Monotone, with_trace);
}

// Certificate check: G* acyclic st-graph containing G, and for every v the
// successors of v induce in G*, after transitive reduction, a bitonic (or monotone) path
// consistent with the successor order.
bool is_v_bitonic_augmentation(const DirectedGraph& g, const PlaneEmbedding& emb, const DirectedGraph& gstar,
                               Mode mode, Vertex* bad = nullptr);

// Oracle: some upward embedding of pert with an st-ordering makes the source's successor list
// monotone and every other list valid for the mode.
bool oracle_type_m(const DirectedGraph& pert, Mode mode);

// Type-M preference check over the processed nodes of r (Q nodes and the root skipped).
using TypeMCache = std::map<std::vector<std::pair<int, int>>, bool>;
struct TypeMAudit {
    int checked = 0;
    int oracle_m = 0;  // nodes where the oracle found Type M
    int violations = 0;
    std::vector<int> bad_nodes;
};
TypeMAudit audit_type_m(const VariableResult& r, Mode mode, int max_vertices = 7, TypeMCache* cache = nullptr);

}  // namespace lplanar
