#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lplanar/graph.hpp"
#include "lplanar/ldraw.hpp"

namespace lplanar {

enum class VertexRole { Center, VPort, HPort, Attach, Internal };
enum class EdgeRole { Rim, Wheel, Gadget };
const char* role_name(VertexRole r);
const char* role_name(EdgeRole r);

struct GadgetGraph {
    DirectedGraph graph;
    std::vector<VertexRole> vertex_role;
    std::vector<EdgeRole> edge_role;
    // Index of the gadget each vertex or edge came from (port vertices keep their wheel).
    std::vector<int> vertex_owner, edge_owner;
};

class GadgetChecksum : public GraphError {
public:
    explicit GadgetChecksum(const std::string& name) : GraphError("gadget data '" + name + "' fails its checksum") {}
};

std::uint64_t fnv1a64(const std::string& s);

// Gadget data as shipped, with its recorded checksum.
struct GadgetSource {
    std::string name, text;
    std::uint64_t checksum;
};
const std::vector<GadgetSource>& gadget_sources();

GadgetGraph parse_gadget(const std::string& text, const std::string& source = "<input>");

// W: vertices u, v, w, z, c in this id order.
GadgetGraph build_wheel();
// Attachments are the vertices labeled u and v.
GadgetGraph build_v_edge_gadget();
// The V-edge gadget turned by a quarter and re-oriented: all edges reversed.
GadgetGraph build_h_edge_gadget();

// Two planar L-drawings of W with the rim as outer face.
std::vector<LDrawing> wheel_drawings();

enum class HvLabel { H, V };

struct HvEdge {
    Vertex u, v;
    HvLabel label;
};

struct HvInstance {
    std::string name = "hv";
    std::vector<std::string> vertex_names;
    std::vector<HvEdge> edges;
    // Optional clockwise edge order per vertex; edges attach to ports in this order.
    std::vector<std::vector<int>> rotation;
};

class NotDegree4 : public GraphError {
public:
    explicit NotDegree4(const std::string& v) : GraphError("vertex '" + v + "' has degree above 4"), vertex(v) {}
    std::string vertex;
};

class PortExhausted : public GraphError {
public:
    PortExhausted(const std::string& v, char kind)
        : GraphError(std::string("vertex '") + v + "' has more than two " + kind + "-edges"), vertex(v) {}
    std::string vertex;
};

HvInstance parse_hv(const std::string& text, const std::string& source = "<input>");
std::string write_hv(const HvInstance& inst);

// Throws NotDegree4, NotPlanar, NotBiconnected or PortExhausted.
void validate_hv(const HvInstance& inst);

struct Reduction {
    GadgetGraph result;
    // center[p] is the wheel center of instance vertex p.
    std::vector<Vertex> center;
    // Gadget index of instance edge i is num_vertices + i; wheels use 0..n-1.
};

Reduction reduce_hv(const HvInstance& inst);

// Sidecar listing "v <label> <role> <owner>" and "e <tail> <head> <role> <owner>".
std::string write_roles(const GadgetGraph& g);

// The four rim polylines trace the boundary of an axis-parallel box with c strictly inside.
bool rim_traces_rectangle(const DirectedGraph& w, const LDrawing& d, const std::vector<Vertex>& rim, Vertex c);

// d must be a planar L-drawing of W whose outer face is bounded by the rim; InvalidDrawing otherwise.
bool check_rectangle_property(const GadgetGraph& w, const LDrawing& d);

struct RimSearchReport {
    long candidates = 0;
    long valid = 0;
    long rim_outer = 0;
    long non_rectangular = 0;
};

// Every rank assignment (x and y permutations) of W.
RimSearchReport rim_rectangle_search(const GadgetGraph& w);

}  // namespace lplanar
