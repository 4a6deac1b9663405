#include "lplanar/reduction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "lplanar/io.hpp"
#include "lplanar/planarity.hpp"
#include "lplanar/spqr.hpp"

namespace lplanar {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& embedded_gadget_files();
}

const char* role_name(VertexRole r) {
    switch (r) {
        case VertexRole::Center: return "center";
        case VertexRole::VPort: return "vport";
        case VertexRole::HPort: return "hport";
        case VertexRole::Attach: return "attach";
        case VertexRole::Internal: return "internal";
    }
    return "?";
}

const char* role_name(EdgeRole r) {
    switch (r) {
        case EdgeRole::Rim: return "rim";
        case EdgeRole::Wheel: return "wheel";
        case EdgeRole::Gadget: return "gadget";
    }
    return "?";
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::vector<GadgetSource>& gadget_sources() {
    static const std::vector<GadgetSource> sources = [] {
        const auto& files = detail::embedded_gadget_files();
        std::map<std::string, std::string> text(files.begin(), files.end());
        std::vector<GadgetSource> out;
        for (const auto& [no, line] : content_lines(text.at("checksums.txt"))) {
            auto w = split_ws(line);
            if (w.size() != 2) throw ParseError("checksums.txt", no, "expected '<file> <fnv1a64 hex>'");
            auto it = text.find(w[0]);
            if (it == text.end()) throw ParseError("checksums.txt", no, "unknown gadget file '" + w[0] + "'");
            out.push_back({w[0], it->second, std::stoull(w[1], nullptr, 16)});
        }
        return out;
    }();
    return sources;
}

namespace {

const std::string& verified(const std::string& file) {
    for (const auto& s : gadget_sources())
        if (s.name == file) {
            if (fnv1a64(s.text) != s.checksum) throw GadgetChecksum(file);
            return s.text;
        }
    throw GadgetChecksum(file);
}

}  // namespace

GadgetGraph parse_gadget(const std::string& text, const std::string& source) {
    static const std::map<std::string, VertexRole> vroles = {{"center", VertexRole::Center},
                                                             {"vport", VertexRole::VPort},
                                                             {"hport", VertexRole::HPort},
                                                             {"attach", VertexRole::Attach},
                                                             {"internal", VertexRole::Internal}};
    static const std::map<std::string, EdgeRole> eroles = {
        {"rim", EdgeRole::Rim}, {"wheel", EdgeRole::Wheel}, {"gadget", EdgeRole::Gadget}};
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "empty gadget");
    auto head = split_ws(lines[0].second);
    if (head.size() != 2 || head[0] != "gadget") throw ParseError(source, lines[0].first, "expected 'gadget <name>'");
    GadgetGraph gg;
    gg.graph.set_name(head[1]);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto w = split_ws(line);
        if (w[0] == "v" && w.size() == 3 && vroles.count(w[2])) {
            if (!valid_name(w[1]) || gg.graph.vertex_by_label(w[1]))
                throw ParseError(source, no, "bad or repeated vertex '" + w[1] + "'");
            gg.graph.add_vertex(w[1]);
            gg.vertex_role.push_back(vroles.at(w[2]));
            gg.vertex_owner.push_back(0);
        } else if (w[0] == "e" && w.size() == 4 && eroles.count(w[3])) {
            auto u = gg.graph.vertex_by_label(w[1]), v = gg.graph.vertex_by_label(w[2]);
            if (!u || !v || *u == *v || gg.graph.has_edge(*u, *v))
                throw ParseError(source, no, "bad edge " + w[1] + " " + w[2]);
            gg.graph.add_edge(*u, *v);
            gg.edge_role.push_back(eroles.at(w[3]));
            gg.edge_owner.push_back(0);
        } else {
            throw ParseError(source, no, "expected 'v <name> <role>' or 'e <tail> <head> <role>'");
        }
    }
    return gg;
}

GadgetGraph build_wheel() { return parse_gadget(verified("wheel.gadget"), "wheel.gadget"); }

GadgetGraph build_v_edge_gadget() { return parse_gadget(verified("vedge.gadget"), "vedge.gadget"); }

GadgetGraph build_h_edge_gadget() {
    GadgetGraph v = build_v_edge_gadget();
    GadgetGraph h;
    h.graph = DirectedGraph(0, "hedge");
    for (Vertex x = 0; x < v.graph.num_vertices(); ++x) h.graph.add_vertex(v.graph.label(x));
    for (const Edge& e : v.graph.edges()) h.graph.add_edge(e.head, e.tail);
    h.vertex_role = v.vertex_role;
    h.vertex_owner = v.vertex_owner;
    h.edge_role = v.edge_role;
    h.edge_owner = v.edge_owner;
    return h;
}

std::vector<LDrawing> wheel_drawings() {
    const std::string& text = verified("wheel_drawings.ldr");
    std::vector<LDrawing> out;
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&] {
        if (block.find("ldrawing") != std::string::npos) out.push_back(parse_ldrawing(block, 5, "wheel_drawings.ldr"));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("ldrawing", 0) == 0) flush();
        block += line + "\n";
    }
    flush();
    return out;
}

HvInstance parse_hv(const std::string& text, const std::string& source) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "empty input; expected 'hvgraph <name>'");
    auto head = split_ws(lines[0].second);
    if (head.size() != 2 || head[0] != "hvgraph" || !valid_name(head[1]))
        throw ParseError(source, lines[0].first, "expected header 'hvgraph <name>'");
    HvInstance inst;
    inst.name = head[1];
    std::map<std::string, Vertex> ids;
    auto vertex = [&](const std::string& s, int no) {
        if (!valid_name(s)) throw ParseError(source, no, "invalid vertex name '" + s + "'");
        auto [it, fresh] = ids.emplace(s, static_cast<Vertex>(inst.vertex_names.size()));
        if (fresh) inst.vertex_names.push_back(s);
        return it->second;
    };
    std::vector<std::pair<int, std::vector<std::string>>> rots;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto w = split_ws(line);
        if (w[0] == "rot") {
            rots.emplace_back(no, w);
            continue;
        }
        if (w[0] == "v" && w.size() == 2) {
            vertex(w[1], no);
            continue;
        }
        if (w[0] != "e" || w.size() != 4 || (w[3] != "H" && w[3] != "V"))
            throw ParseError(source, no, "expected 'e <u> <v> H|V'");
        Vertex u = vertex(w[1], no), v = vertex(w[2], no);
        if (u == v) throw ParseError(source, no, "self-loop at '" + w[1] + "'");
        for (const auto& e : inst.edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
                throw ParseError(source, no, "duplicate edge " + w[1] + " " + w[2]);
        inst.edges.push_back({u, v, w[3] == "H" ? HvLabel::H : HvLabel::V});
    }
    // "rot <vertex> <edge index> ...": clockwise order of edges (0-based, in file order).
    if (!rots.empty()) inst.rotation.assign(inst.vertex_names.size(), {});
    for (const auto& [no, w] : rots) {
        if (w.size() < 2 || !ids.count(w[1])) throw ParseError(source, no, "rot line needs a known vertex");
        Vertex p = ids[w[1]];
        for (std::size_t k = 2; k < w.size(); ++k) {
            int e = -1;
            try {
                e = std::stoi(w[k]);
            } catch (const std::exception&) {
            }
            if (e < 0 || e >= static_cast<int>(inst.edges.size()) || (inst.edges[e].u != p && inst.edges[e].v != p))
                throw ParseError(source, no, "'" + w[k] + "' is not an edge at '" + w[1] + "'");
            inst.rotation[p].push_back(e);
        }
    }
    return inst;
}

std::string write_hv(const HvInstance& inst) {
    std::ostringstream o;
    o << "hvgraph " << inst.name << "\n";
    std::vector<int> deg(inst.vertex_names.size(), 0);
    for (const auto& e : inst.edges) ++deg[e.u], ++deg[e.v];
    for (std::size_t p = 0; p < deg.size(); ++p)
        if (!deg[p]) o << "v " << inst.vertex_names[p] << "\n";
    for (const auto& e : inst.edges)
        o << "e " << inst.vertex_names[e.u] << " " << inst.vertex_names[e.v] << " " << (e.label == HvLabel::H ? "H" : "V")
          << "\n";
    for (std::size_t p = 0; p < inst.rotation.size(); ++p) {
        if (inst.rotation[p].empty()) continue;
        o << "rot " << inst.vertex_names[p];
        for (int e : inst.rotation[p]) o << " " << e;
        o << "\n";
    }
    return o.str();
}

namespace {

// Per vertex, the incident edge indices in attachment order.
std::vector<std::vector<int>> attachment_order(const HvInstance& inst) {
    const int n = static_cast<int>(inst.vertex_names.size());
    std::vector<std::vector<int>> ord(n);
    for (int i = 0; i < static_cast<int>(inst.edges.size()); ++i) {
        ord[inst.edges[i].u].push_back(i);
        ord[inst.edges[i].v].push_back(i);
    }
    if (inst.rotation.empty()) return ord;
    for (int p = 0; p < n; ++p) {
        if (inst.rotation[p].empty()) continue;
        auto a = ord[p], b = inst.rotation[p];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw GraphError("rotation at '" + inst.vertex_names[p] + "' does not list its edges exactly once");
        ord[p] = inst.rotation[p];
    }
    return ord;
}

}  // namespace

void validate_hv(const HvInstance& inst) {
    const int n = static_cast<int>(inst.vertex_names.size());
    DirectedGraph g(n);
    std::vector<int> nv(n, 0), nh(n, 0);
    for (const auto& e : inst.edges) {
        g.add_edge(e.u, e.v);
        auto& c = e.label == HvLabel::V ? nv : nh;
        ++c[e.u], ++c[e.v];
    }
    for (Vertex p = 0; p < n; ++p)
        if (g.degree(p) > 4) throw NotDegree4(inst.vertex_names[p]);
    if (!is_planar(g)) throw NotPlanar({});
    Vertex cut = kNone;
    if (!is_biconnected(g, &cut)) throw NotBiconnected(cut);
    for (Vertex p = 0; p < n; ++p) {
        if (nv[p] > 2) throw PortExhausted(inst.vertex_names[p], 'V');
        if (nh[p] > 2) throw PortExhausted(inst.vertex_names[p], 'H');
    }
    attachment_order(inst);
}

Reduction reduce_hv(const HvInstance& inst) {
    validate_hv(inst);
    const int n = static_cast<int>(inst.vertex_names.size());
    const int m = static_cast<int>(inst.edges.size());
    const GadgetGraph wheel = build_wheel(), vg = build_v_edge_gadget(), hg = build_h_edge_gadget();

    Reduction red;
    GadgetGraph& out = red.result;
    out.graph = DirectedGraph(0, inst.name + "_L");
    auto add_vertex = [&](const std::string& label, VertexRole r, int owner) {
        out.vertex_role.push_back(r);
        out.vertex_owner.push_back(owner);
        return out.graph.add_vertex(label);
    };
    auto add_edge = [&](Vertex a, Vertex b, EdgeRole r, int owner) {
        out.edge_role.push_back(r);
        out.edge_owner.push_back(owner);
        out.graph.add_edge(a, b);
    };

    // Free ports per vertex, in the order they are handed out.
    std::vector<std::vector<Vertex>> free_v(n), free_h(n);
    red.center.assign(n, kNone);
    for (Vertex p = 0; p < n; ++p) {
        std::vector<Vertex> id(wheel.graph.num_vertices());
        for (Vertex x = 0; x < wheel.graph.num_vertices(); ++x) {
            id[x] = add_vertex(inst.vertex_names[p] + "." + wheel.graph.label(x), wheel.vertex_role[x], p);
            if (wheel.vertex_role[x] == VertexRole::VPort) free_v[p].push_back(id[x]);
            if (wheel.vertex_role[x] == VertexRole::HPort) free_h[p].push_back(id[x]);
            if (wheel.vertex_role[x] == VertexRole::Center) red.center[p] = id[x];
        }
        for (EdgeId e = 0; e < wheel.graph.num_edges(); ++e)
            add_edge(id[wheel.graph.edge(e).tail], id[wheel.graph.edge(e).head], wheel.edge_role[e], p);
    }

    std::vector<std::array<Vertex, 2>> port(m, {kNone, kNone});
    auto ord = attachment_order(inst);
    for (Vertex p = 0; p < n; ++p) {
        std::size_t used_v = 0, used_h = 0;
        for (int i : ord[p]) {
            const HvEdge& e = inst.edges[i];
            Vertex x = e.label == HvLabel::V ? free_v[p][used_v++] : free_h[p][used_h++];
            port[i][e.u == p ? 0 : 1] = x;
        }
    }

    for (int i = 0; i < m; ++i) {
        const GadgetGraph& gd = inst.edges[i].label == HvLabel::V ? vg : hg;
        const int owner = n + i;
        std::vector<Vertex> id(gd.graph.num_vertices());
        for (Vertex x = 0; x < gd.graph.num_vertices(); ++x) {
            const std::string& lab = gd.graph.label(x);
            if (gd.vertex_role[x] == VertexRole::Attach)
                id[x] = port[i][lab == "u" ? 0 : 1];
            else
                id[x] = add_vertex("e" + std::to_string(i) + "." + lab, gd.vertex_role[x], owner);
        }
        for (EdgeId e = 0; e < gd.graph.num_edges(); ++e)
            add_edge(id[gd.graph.edge(e).tail], id[gd.graph.edge(e).head], gd.edge_role[e], owner);
    }
    return red;
}

std::string write_roles(const GadgetGraph& g) {
    std::ostringstream o;
    o << "roles " << g.graph.name() << "\n";
    for (Vertex v = 0; v < g.graph.num_vertices(); ++v)
        o << "v " << g.graph.label(v) << " " << role_name(g.vertex_role[v]) << " " << g.vertex_owner[v] << "\n";
    for (EdgeId e = 0; e < g.graph.num_edges(); ++e)
        o << "e " << g.graph.label(g.graph.edge(e).tail) << " " << g.graph.label(g.graph.edge(e).head) << " "
          << role_name(g.edge_role[e]) << " " << g.edge_owner[e] << "\n";
    return o.str();
}

bool rim_traces_rectangle(const DirectedGraph& w, const LDrawing& d, const std::vector<Vertex>& rim, Vertex c) {
    struct Seg {
        int x0, y0, x1, y1;
    };
    std::vector<Seg> segs;
    const std::size_t k = rim.size();
    for (std::size_t i = 0; i < k; ++i) {
        Vertex a = rim[i], b = rim[(i + 1) % k];
        auto e = w.find_edge(a, b);
        if (!e) e = w.find_edge(b, a);
        if (!e) return false;
        Vertex t = w.edge(*e).tail, h = w.edge(*e).head;
        segs.push_back({d.x[t], d.y[t], d.x[t], d.y[h]});
        segs.push_back({d.x[t], d.y[h], d.x[h], d.y[h]});
    }
    int xmin = segs[0].x0, xmax = xmin, ymin = segs[0].y0, ymax = ymin;
    for (const Seg& s : segs) {
        xmin = std::min({xmin, s.x0, s.x1});
        xmax = std::max({xmax, s.x0, s.x1});
        ymin = std::min({ymin, s.y0, s.y1});
        ymax = std::max({ymax, s.y0, s.y1});
    }
    if (xmin == xmax || ymin == ymax) return false;
    // Per side, the covered intervals must add up to the whole side.
    std::vector<std::pair<int, int>> side[4];
    for (const Seg& s : segs) {
        if (s.x0 == s.x1 && s.y0 == s.y1) continue;
        std::pair<int, int> iv;
        int which;
        if (s.x0 == s.x1) {
            if (s.x0 != xmin && s.x0 != xmax) return false;
            which = s.x0 == xmin ? 0 : 1;
            iv = std::minmax(s.y0, s.y1);
        } else {
            if (s.y0 != ymin && s.y0 != ymax) return false;
            which = s.y0 == ymin ? 2 : 3;
            iv = std::minmax(s.x0, s.x1);
        }
        side[which].push_back(iv);
    }
    for (int sd = 0; sd < 4; ++sd) {
        int lo = sd < 2 ? ymin : xmin, hi = sd < 2 ? ymax : xmax;
        auto& v = side[sd];
        std::sort(v.begin(), v.end());
        int reach = lo;
        for (auto [a, b] : v) {
            if (a > reach) return false;
            reach = std::max(reach, b);
        }
        if (reach < hi) return false;
    }
    return d.x[c] > xmin && d.x[c] < xmax && d.y[c] > ymin && d.y[c] < ymax;
}

namespace {

struct WheelParts {
    std::vector<Vertex> rim;
    Vertex center = kNone;
};

WheelParts wheel_parts(const GadgetGraph& w) {
    WheelParts p;
    std::vector<std::vector<Vertex>> adj(w.graph.num_vertices());
    for (EdgeId e = 0; e < w.graph.num_edges(); ++e)
        if (w.edge_role[e] == EdgeRole::Rim) {
            adj[w.graph.edge(e).tail].push_back(w.graph.edge(e).head);
            adj[w.graph.edge(e).head].push_back(w.graph.edge(e).tail);
        }
    for (Vertex v = 0; v < w.graph.num_vertices(); ++v)
        if (w.vertex_role[v] == VertexRole::Center) p.center = v;
    Vertex start = kNone;
    for (Vertex v = 0; v < w.graph.num_vertices() && start == kNone; ++v)
        if (!adj[v].empty()) start = v;
    if (start == kNone || p.center == kNone) throw GraphError("not a wheel gadget");
    Vertex prev = kNone, cur = start;
    do {
        if (adj[cur].size() != 2) throw GraphError("rim is not a cycle");
        p.rim.push_back(cur);
        Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    } while (cur != start && p.rim.size() <= adj.size());
    return p;
}

bool outer_is_rim(const GadgetGraph& w, const LDrawing& d) {
    PlaneEmbedding emb = drawing_embedding(w.graph, d);
    const auto& f = emb.face(emb.outer_face());
    int rim_edges = 0;
    for (EdgeId e = 0; e < w.graph.num_edges(); ++e) rim_edges += w.edge_role[e] == EdgeRole::Rim;
    if (static_cast<int>(f.size()) != rim_edges) return false;
    for (Dart x : f)
        if (w.edge_role[dart_edge(x)] != EdgeRole::Rim) return false;
    return true;
}

}  // namespace

bool check_rectangle_property(const GadgetGraph& w, const LDrawing& d) {
    auto rep = validate_ldrawing(w.graph, d, false);
    if (!rep.ok()) throw InvalidDrawing(rep.to_string());
    if (!outer_is_rim(w, d)) throw InvalidDrawing("outer face is not bounded by the rim");
    auto parts = wheel_parts(w);
    return rim_traces_rectangle(w.graph, d, parts.rim, parts.center);
}

RimSearchReport rim_rectangle_search(const GadgetGraph& w) {
    const int n = w.graph.num_vertices();
    auto parts = wheel_parts(w);
    RimSearchReport rep;
    std::vector<int> px(n), py(n);
    std::iota(px.begin(), px.end(), 1);
    do {
        std::iota(py.begin(), py.end(), 1);
        do {
            ++rep.candidates;
            LDrawing d{"w", px, py};
            if (!validate_ldrawing(w.graph, d, false).ok()) continue;
            ++rep.valid;
            if (!outer_is_rim(w, d)) continue;
            ++rep.rim_outer;
            if (!rim_traces_rectangle(w.graph, d, parts.rim, parts.center)) ++rep.non_rectangular;
        } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
    return rep;
}

}  // namespace lplanar
