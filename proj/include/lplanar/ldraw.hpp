#pragma once

#include <string>
#include <vector>

#include "lplanar/bitonic.hpp"
#include "lplanar/embedding.hpp"

namespace lplanar {

// Integer point per vertex. Edge (u,v) is the vertical segment at x(u) from y(u) to y(v)
// followed by the horizontal segment at y(v) from x(u) to x(v).
struct LDrawing {
    std::string name = "g";
    std::vector<int> x, y;
};

enum class Port { Top = 0, Right = 1, Bottom = 2, Left = 3 };
const char* port_name(Port p);
Port exit_port(const DirectedGraph& g, const LDrawing& d, EdgeId e);
Port entry_port(const DirectedGraph& g, const LDrawing& d, EdgeId e);

class InvalidPair : public GraphError {
public:
    explicit InvalidPair(const std::string& why) : GraphError("invalid pair: " + why) {}
};

class InvalidDrawing : public GraphError {
public:
    explicit InvalidDrawing(const std::string& why) : GraphError("invalid drawing: " + why) {}
};

struct BitonicPair {
    PlaneEmbedding embedding;
    StOrdering pi;
};

// y = pi; x from a left-to-right order grown one vertex at a time.
LDrawing construct_upward_ldrawing(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi);
// Needs monotonically decreasing successor lists; every edge then runs left to right.
LDrawing construct_upward_rightward_ldrawing(const DirectedGraph& g, const PlaneEmbedding& emb,
                                             const StOrdering& pi);

// Rotation read from the geometry; outer face below the lowest vertex; pi = rank of y.
BitonicPair extract_bitonic_pair(const DirectedGraph& g, const LDrawing& d);
// Rotation only, for any drawing with distinct coordinates.
PlaneEmbedding drawing_embedding(const DirectedGraph& g, const LDrawing& d);

struct Violation {
    enum class Kind { Missing, Coordinates, Upward, Rightward, Crossing, VertexOnSegment };
    Kind kind;
    int a = kNone;  // vertex or edge, by kind
    int b = kNone;
    std::string detail;
};
const char* violation_name(Violation::Kind k);

struct ValidationReport {
    std::vector<Violation> violations;
    bool truncated = false;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate_ldrawing(const DirectedGraph& g, const LDrawing& d, bool upward = true,
                                   bool rightward = false);

// Port use and bend count per edge.
struct KandinskyShape {
    std::vector<Port> tail_port, head_port;
    std::vector<int> bends;
};
KandinskyShape shape_of(const DirectedGraph& g, const LDrawing& d);

// One bend per edge; outgoing ports pairwise equal or opposite; incoming vs outgoing
// perpendicular; clockwise port order agrees with the rotation.
bool check_kandinsky_conditions(const DirectedGraph& g, const PlaneEmbedding& emb, const KandinskyShape& shape);
bool check_kandinsky_conditions(const DirectedGraph& g, const LDrawing& d);

struct SvgStyle {
    int scale = 40;
    int margin = 30;
    bool labels = true;
    double overlap_offset = 3.0;  // hairline spacing between overlapping strands
    double bend_radius = 6.0;
    double vertex_radius = 5.0;
};
std::string render_svg(const DirectedGraph& g, const LDrawing& d, const SvgStyle& style = {});

// Text format: "ldrawing <name>" then "v <id> <x> <y> [label]" per vertex, ids 0..n-1,
// optionally followed by "e <tail id> <head id>" lines that make the file self-contained.
std::string write_ldrawing(const LDrawing& d);
std::string write_ldrawing(const DirectedGraph& g, const LDrawing& d);

struct LDrawingDocument {
    LDrawing drawing;
    DirectedGraph graph;  // vertices always; edges only when has_edges
    bool has_edges = false;
};
LDrawingDocument parse_ldrawing_document(const std::string& text, const std::string& source = "<input>");
LDrawing parse_ldrawing(const std::string& text, int n, const std::string& source = "<input>");

}  // namespace lplanar
