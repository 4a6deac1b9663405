#include "lplanar/ldraw.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "lplanar/io.hpp"

namespace lplanar {

const char* port_name(Port p) {
    switch (p) {
        case Port::Top: return "top";
        case Port::Right: return "right";
        case Port::Bottom: return "bottom";
        case Port::Left: return "left";
    }
    return "?";
}

Port exit_port(const DirectedGraph& g, const LDrawing& d, EdgeId e) {
    const Edge& ed = g.edge(e);
    return d.y[ed.head] > d.y[ed.tail] ? Port::Top : Port::Bottom;
}

Port entry_port(const DirectedGraph& g, const LDrawing& d, EdgeId e) {
    const Edge& ed = g.edge(e);
    return d.x[ed.tail] < d.x[ed.head] ? Port::Left : Port::Right;
}

namespace {

// Incoming edges of v in clockwise order, starting after the outgoing block (at a sink,
// after its outer angle).
std::vector<EdgeId> predecessor_edges(const DirectedGraph& g, const PlaneEmbedding& emb, Vertex v) {
    const auto& r = emb.rotation(v);
    const int d = static_cast<int>(r.size());
    std::vector<EdgeId> out;
    if (g.in_degree(v) == 0) return out;
    int start = -1;
    if (g.out_degree(v) == 0) {
        int a = emb.angle_on_face(v, emb.outer_face());
        if (a < 0) throw InvalidPair("sink not on the outer face");
        start = (a + 1) % d;
    } else {
        for (int i = 0; i < d; ++i)
            if (g.edge(r[(i + d - 1) % d]).tail == v && g.edge(r[i]).head == v) start = i;
    }
    for (int k = 0; k < d; ++k) {
        EdgeId e = r[(start + k) % d];
        if (g.edge(e).head != v) break;
        out.push_back(e);
    }
    return out;
}

LDrawing construct(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi, bool rightward) {
    const int n = g.num_vertices();
    Mode mode = rightward ? Mode::Monotone : Mode::Bitonic;
    if (static_cast<int>(pi.size()) != n) throw InvalidPair("ordering has wrong size");
    if (!is_valid_pair(g, emb, pi, mode))
        throw InvalidPair(rightward ? "successor lists not monotonically decreasing" : "successor lists not bitonic");
    LDrawing d;
    d.name = g.name();
    d.x.assign(n, 0);
    d.y = pi;
    if (n == 0) return d;

    // Remaining successor window [lo, hi] of each vertex, as positions in its successor list.
    std::vector<int> lo(n, 0), hi(n), pos(g.num_edges(), 0);
    for (Vertex v = 0; v < n; ++v) {
        auto se = successor_edges(g, emb, v);
        for (int i = 0; i < static_cast<int>(se.size()); ++i) pos[se[i]] = i;
        hi[v] = static_cast<int>(se.size()) - 1;
    }
    // Left-to-right order as a linked list between two sentinels.
    const int L = n, R = n + 1;
    std::vector<int> prev(n + 2, kNone), next(n + 2, kNone);
    next[L] = R;
    prev[R] = L;
    auto insert_before = [&](int at, int v) {
        int p = prev[at];
        next[p] = v;
        prev[v] = p;
        next[v] = at;
        prev[at] = v;
    };

    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[pi[v] - 1] = v;
    insert_before(R, order[0]);
    auto bad = [&](Vertex v) { return InvalidPair("vertex " + std::to_string(v) + " not at a window end"); };
    for (int i = 1; i < n; ++i) {
        Vertex v = order[i];
        auto in = predecessor_edges(g, emb, v);
        std::reverse(in.begin(), in.end());  // tails now left to right
        const int k = static_cast<int>(in.size());
        if (k == 0) throw InvalidPair("second source " + std::to_string(v));
        auto tail = [&](int j) { return g.edge(in[j]).tail; };
        if (rightward) {
            for (int j = 0; j < k; ++j) {
                Vertex u = tail(j);
                if (pos[in[j]] != hi[u] || (j > 0 && lo[u] != hi[u])) throw bad(v);
                --hi[u];
            }
            insert_before(next[tail(k - 1)], v);
        } else if (k == 1) {
            Vertex u = tail(0);
            if (pos[in[0]] == hi[u]) {
                --hi[u];
                insert_before(next[u], v);
            } else if (pos[in[0]] == lo[u]) {
                ++lo[u];
                insert_before(u, v);
            } else {
                throw bad(v);
            }
        } else {
            for (int j = 0; j < k; ++j) {
                Vertex u = tail(j);
                int p = pos[in[j]];
                if (j == 0) {
                    if (p != hi[u]) throw bad(v);
                    --hi[u];
                } else {
                    if (p != lo[u] || (j < k - 1 && lo[u] != hi[u])) throw bad(v);
                    ++lo[u];
                }
            }
            insert_before(tail(k - 1), v);
        }
    }
    int x = 0;
    for (int c = next[L]; c != R; c = next[c]) d.x[c] = ++x;
    return d;
}

}  // namespace

LDrawing construct_upward_ldrawing(const DirectedGraph& g, const PlaneEmbedding& emb, const StOrdering& pi) {
    return construct(g, emb, pi, false);
}

LDrawing construct_upward_rightward_ldrawing(const DirectedGraph& g, const PlaneEmbedding& emb,
                                             const StOrdering& pi) {
    return construct(g, emb, pi, true);
}

namespace {

// Clockwise sort key of edge e at endpoint v. Inside one port, strands peeling off to the
// counterclockwise side come first (nearest first), then the others (farthest first).
std::tuple<int, int, int> rotation_key(const DirectedGraph& g, const LDrawing& d, EdgeId e, Vertex v) {
    const Edge& ed = g.edge(e);
    if (ed.tail == v) {
        Vertex w = ed.head;
        Port p = exit_port(g, d, e);
        int dist = std::abs(d.y[w] - d.y[v]);
        bool ccw = p == Port::Top ? d.x[w] < d.x[v] : d.x[w] > d.x[v];
        return {static_cast<int>(p), ccw ? 0 : 1, ccw ? dist : -dist};
    }
    Vertex u = ed.tail;
    Port p = entry_port(g, d, e);
    int dist = std::abs(d.x[u] - d.x[v]);
    bool ccw = p == Port::Left ? d.y[u] < d.y[v] : d.y[u] > d.y[v];
    return {static_cast<int>(p), ccw ? 0 : 1, ccw ? dist : -dist};
}

bool distinct(const std::vector<int>& a) {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

PlaneEmbedding drawing_embedding(const DirectedGraph& g, const LDrawing& d) {
    const int n = g.num_vertices();
    if (static_cast<int>(d.x.size()) != n || static_cast<int>(d.y.size()) != n)
        throw InvalidDrawing("coordinates do not cover all vertices");
    if (!distinct(d.x) || !distinct(d.y)) throw InvalidDrawing("coordinates not exclusive");
    std::vector<std::vector<EdgeId>> rot(n);
    for (Vertex v = 0; v < n; ++v) {
        auto& r = rot[v];
        for (EdgeId e : g.out_edges(v)) r.push_back(e);
        for (EdgeId e : g.in_edges(v)) r.push_back(e);
        std::sort(r.begin(), r.end(),
                  [&](EdgeId a, EdgeId b) { return rotation_key(g, d, a, v) < rotation_key(g, d, b, v); });
    }
    PlaneEmbedding emb(g, rot);
    if (n == 0) return emb;
    // Straight down from the lowest vertex is free, so that angle is on the outer face.
    Vertex low = static_cast<Vertex>(std::min_element(d.y.begin(), d.y.end()) - d.y.begin());
    const auto& r = rot[low];
    if (!r.empty()) {
        int above = 0;
        for (EdgeId e : r)
            if (std::get<0>(rotation_key(g, d, e, low)) <= static_cast<int>(Port::Right)) ++above;
        int deg = static_cast<int>(r.size());
        emb.set_outer_face(emb.face_of_angle(low, (above + deg - 1) % deg));
    }
    return emb;
}

BitonicPair extract_bitonic_pair(const DirectedGraph& g, const LDrawing& d) {
    auto rep = validate_ldrawing(g, d, true, false);
    if (!rep.ok()) throw InvalidDrawing(rep.to_string());
    BitonicPair out;
    out.embedding = drawing_embedding(g, d);
    const int n = g.num_vertices();
    std::vector<Vertex> byy(n);
    std::iota(byy.begin(), byy.end(), 0);
    std::sort(byy.begin(), byy.end(), [&](Vertex a, Vertex b) { return d.y[a] < d.y[b]; });
    out.pi.assign(n, 0);
    for (int i = 0; i < n; ++i) out.pi[byy[i]] = i + 1;
    return out;
}

const char* violation_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Missing: return "missing";
        case Violation::Kind::Coordinates: return "coordinates";
        case Violation::Kind::Upward: return "upward";
        case Violation::Kind::Rightward: return "rightward";
        case Violation::Kind::Crossing: return "crossing";
        case Violation::Kind::VertexOnSegment: return "vertex-on-segment";
    }
    return "?";
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << violation_name(v.kind) << " " << v.a << " " << v.b << ": " << v.detail << "\n";
    if (truncated) os << "(truncated)\n";
    return os.str();
}

ValidationReport validate_ldrawing(const DirectedGraph& g, const LDrawing& d, bool upward, bool rightward) {
    constexpr std::size_t kCap = 10000;
    ValidationReport rep;
    const int n = g.num_vertices(), m = g.num_edges();
    auto add = [&](Violation::Kind k, int a, int b, std::string s) {
        if (rep.violations.size() >= kCap) {
            rep.truncated = true;
            return;
        }
        rep.violations.push_back({k, a, b, std::move(s)});
    };
    if (static_cast<int>(d.x.size()) != n || static_cast<int>(d.y.size()) != n) {
        add(Violation::Kind::Missing, kNone, kNone, "coordinates do not cover all vertices");
        return rep;
    }
    bool exclusive = true;
    for (const auto* c : {&d.x, &d.y}) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return (*c)[a] < (*c)[b]; });
        for (int i = 1; i < n; ++i)
            if ((*c)[idx[i]] == (*c)[idx[i - 1]]) {
                exclusive = false;
                add(Violation::Kind::Coordinates, idx[i - 1], idx[i],
                    std::string("shared ") + (c == &d.x ? "x" : "y") + " = " + std::to_string((*c)[idx[i]]));
            }
    }
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        if (upward && d.y[ed.tail] >= d.y[ed.head]) add(Violation::Kind::Upward, e, kNone, "edge not upward");
        if (rightward && d.x[ed.tail] >= d.x[ed.head]) add(Violation::Kind::Rightward, e, kNone, "edge not rightward");
    }

    // Horizontal/vertical pairs meeting at a point interior to both.
    struct V {
        int x, y0, y1, e;
    };
    struct H {
        int y, x0, x1, e;
    };
    std::vector<V> vs;
    std::vector<H> hs;
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        int xu = d.x[ed.tail], yu = d.y[ed.tail], xv = d.x[ed.head], yv = d.y[ed.head];
        vs.push_back({xu, std::min(yu, yv), std::max(yu, yv), e});
        hs.push_back({yv, std::min(xu, xv), std::max(xu, xv), e});
    }
    std::vector<int> by_lo(m), by_hi(m);
    std::iota(by_lo.begin(), by_lo.end(), 0);
    std::iota(by_hi.begin(), by_hi.end(), 0);
    std::sort(by_lo.begin(), by_lo.end(), [&](int a, int b) { return vs[a].y0 < vs[b].y0; });
    std::sort(by_hi.begin(), by_hi.end(), [&](int a, int b) { return vs[a].y1 < vs[b].y1; });
    std::sort(hs.begin(), hs.end(), [](const H& a, const H& b) { return a.y < b.y; });
    std::multiset<std::pair<int, int>> active;
    std::size_t pl = 0, ph = 0;
    for (const H& h : hs) {
        while (ph < by_hi.size() && vs[by_hi[ph]].y1 <= h.y) {
            const V& v = vs[by_hi[ph++]];
            auto it = active.find({v.x, v.e});
            if (it != active.end()) active.erase(it);
        }
        while (pl < by_lo.size() && vs[by_lo[pl]].y0 < h.y) {
            const V& v = vs[by_lo[pl++]];
            if (v.y1 > h.y) active.insert({v.x, v.e});
        }
        for (auto it = active.lower_bound({h.x0 + 1, INT_MIN}); it != active.end() && it->first < h.x1; ++it)
            add(Violation::Kind::Crossing, h.e, it->second,
                "edge " + std::to_string(h.e) + " crosses edge " + std::to_string(it->second));
    }
    // With exclusive coordinates no vertex can lie inside a segment.
    if (!exclusive && static_cast<long long>(n) * m <= 10'000'000) {
        for (EdgeId e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            for (Vertex w = 0; w < n; ++w) {
                if (w == ed.tail || w == ed.head) continue;
                const V& v = vs[e];
                bool on_v = d.x[w] == v.x && d.y[w] >= v.y0 && d.y[w] <= v.y1;
                int xu = d.x[ed.tail], xv = d.x[ed.head], yv = d.y[ed.head];
                bool on_h = d.y[w] == yv && d.x[w] >= std::min(xu, xv) && d.x[w] <= std::max(xu, xv);
                if (on_v || on_h)
                    add(Violation::Kind::VertexOnSegment, w, e,
                        "vertex " + std::to_string(w) + " on edge " + std::to_string(e));
            }
        }
    }
    return rep;
}

KandinskyShape shape_of(const DirectedGraph& g, const LDrawing& d) {
    KandinskyShape s;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        s.tail_port.push_back(exit_port(g, d, e));
        s.head_port.push_back(entry_port(g, d, e));
        s.bends.push_back(1);
    }
    return s;
}

bool check_kandinsky_conditions(const DirectedGraph& g, const PlaneEmbedding& emb, const KandinskyShape& shape) {
    const int m = g.num_edges();
    if (static_cast<int>(shape.tail_port.size()) != m || static_cast<int>(shape.head_port.size()) != m ||
        static_cast<int>(shape.bends.size()) != m)
        return false;
    for (EdgeId e = 0; e < m; ++e) {
        if (shape.bends[e] != 1) return false;
        if ((static_cast<int>(shape.tail_port[e]) ^ static_cast<int>(shape.head_port[e]) ^ 1) & 1) return false;
    }
    auto port_at = [&](EdgeId e, Vertex v) {
        return static_cast<int>(g.edge(e).tail == v ? shape.tail_port[e] : shape.head_port[e]);
    };
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& r = emb.rotation(v);
        // Angles are multiples of a right angle: same or opposite port differ by an even count.
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j) {
                bool oi = g.edge(r[i]).tail == v, oj = g.edge(r[j]).tail == v;
                bool parallel = ((port_at(r[i], v) - port_at(r[j], v)) & 1) == 0;
                if (oi == oj && !parallel) return false;
                if (oi != oj && parallel) return false;
            }
        int descents = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (port_at(r[(i + 1) % r.size()], v) < port_at(r[i], v)) ++descents;
        if (descents > 1) return false;
    }
    return true;
}

bool check_kandinsky_conditions(const DirectedGraph& g, const LDrawing& d) {
    auto rep = validate_ldrawing(g, d, false, false);
    if (!rep.ok()) throw InvalidDrawing(rep.to_string());
    return check_kandinsky_conditions(g, drawing_embedding(g, d), shape_of(g, d));
}

std::string write_ldrawing(const LDrawing& d) {
    std::ostringstream os;
    os << "ldrawing " << d.name << "\n";
    for (std::size_t v = 0; v < d.x.size(); ++v) os << "v " << v << " " << d.x[v] << " " << d.y[v] << "\n";
    return os.str();
}

std::string write_ldrawing(const DirectedGraph& g, const LDrawing& d) {
    std::ostringstream os;
    os << "ldrawing " << d.name << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        os << "v " << v << " " << d.x[v] << " " << d.y[v] << " " << g.label(v) << "\n";
    for (const Edge& e : g.edges()) os << "e " << e.tail << " " << e.head << "\n";
    return os.str();
}

LDrawingDocument parse_ldrawing_document(const std::string& text, const std::string& source) {
    LDrawingDocument doc;
    struct VLine {
        int ln, id, x, y;
        std::string label;
    };
    std::vector<VLine> vl;
    std::vector<std::array<int, 3>> el;
    auto number = [&](const std::string& t, int ln) {
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw ParseError(source, ln, "bad integer '" + t + "'");
        }
    };
    int ln = 0;
    bool header = false;
    for (const auto& [no, line] : content_lines(text)) {
        ln = no;
        auto tok = split_ws(line);
        if (!header) {
            if (tok[0] != "ldrawing" || tok.size() > 2) throw ParseError(source, no, "expected 'ldrawing <name>'");
            if (tok.size() == 2) doc.drawing.name = tok[1];
            header = true;
            continue;
        }
        if (tok[0] == "v" && (tok.size() == 4 || tok.size() == 5)) {
            vl.push_back({no, number(tok[1], no), number(tok[2], no), number(tok[3], no), tok.size() == 5 ? tok[4] : ""});
        } else if (tok[0] == "e" && tok.size() == 3) {
            el.push_back({no, number(tok[1], no), number(tok[2], no)});
        } else {
            throw ParseError(source, no, "expected 'v <id> <x> <y> [label]' or 'e <tail> <head>'");
        }
    }
    if (!header) throw ParseError(source, ln, "missing 'ldrawing' header");
    const int n = static_cast<int>(vl.size());
    std::vector<const VLine*> by_id(n, nullptr);
    for (const auto& v : vl) {
        if (v.id < 0 || v.id >= n) throw ParseError(source, v.ln, "vertex id out of range");
        if (by_id[v.id]) throw ParseError(source, v.ln, "vertex listed twice");
        by_id[v.id] = &v;
    }
    doc.drawing.x.resize(n);
    doc.drawing.y.resize(n);
    doc.graph = DirectedGraph(0, doc.drawing.name.empty() ? "g" : doc.drawing.name);
    for (int i = 0; i < n; ++i) {
        doc.drawing.x[i] = by_id[i]->x;
        doc.drawing.y[i] = by_id[i]->y;
        try {
            doc.graph.add_vertex(by_id[i]->label);
        } catch (const GraphError& ex) {
            throw ParseError(source, by_id[i]->ln, ex.what());
        }
    }
    for (const auto& [no, a, b] : el) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError(source, no, "edge endpoint out of range");
        try {
            doc.graph.add_edge(a, b);
        } catch (const GraphError& ex) {
            throw ParseError(source, no, ex.what());
        }
    }
    doc.has_edges = !el.empty();
    return doc;
}

LDrawing parse_ldrawing(const std::string& text, int n, const std::string& source) {
    auto doc = parse_ldrawing_document(text, source);
    const int got = static_cast<int>(doc.drawing.x.size());
    if (got != n)
        throw ParseError(source, 1, "drawing lists " + std::to_string(got) + " vertices, expected " + std::to_string(n));
    return doc.drawing;
}

}  // namespace lplanar

namespace lplanar {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string xml_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        switch (c) {
            case '<': o += "&lt;"; break;
            case '>': o += "&gt;"; break;
            case '&': o += "&amp;"; break;
            case '"': o += "&quot;"; break;
            default: o += c;
        }
    }
    return o;
}

}  // namespace

std::string render_svg(const DirectedGraph& g, const LDrawing& d, const SvgStyle& st) {
    const int n = g.num_vertices(), m = g.num_edges();
    int minx = 0, maxx = 0, miny = 0, maxy = 0;
    if (n > 0) {
        minx = *std::min_element(d.x.begin(), d.x.end());
        maxx = *std::max_element(d.x.begin(), d.x.end());
        miny = *std::min_element(d.y.begin(), d.y.end());
        maxy = *std::max_element(d.y.begin(), d.y.end());
    }
    auto X = [&](double x) { return st.margin + (x - minx) * st.scale; };
    auto Y = [&](double y) { return st.margin + (maxy - y) * st.scale; };

    // Strands sharing a port are fanned out in clockwise order so overlaps stay readable.
    std::vector<double> tail_off(m, 0.0), head_off(m, 0.0);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<std::pair<std::tuple<int, int, int>, EdgeId>> ends;
        for (EdgeId e : g.out_edges(v)) ends.emplace_back(rotation_key(g, d, e, v), e);
        for (EdgeId e : g.in_edges(v)) ends.emplace_back(rotation_key(g, d, e, v), e);
        std::sort(ends.begin(), ends.end());
        for (int p = 0; p < 4; ++p) {
            std::vector<EdgeId> bundle;
            for (auto& [k, e] : ends)
                if (std::get<0>(k) == p) bundle.push_back(e);
            const double c = (static_cast<double>(bundle.size()) - 1) / 2.0;
            // Clockwise runs +x at the top, -y on the right, -x at the bottom, +y on the left.
            const double sign = (p == 0 || p == 3) ? 1.0 : -1.0;
            for (std::size_t i = 0; i < bundle.size(); ++i) {
                double off = sign * (static_cast<double>(i) - c) * st.overlap_offset;
                if (g.edge(bundle[i]).tail == v)
                    tail_off[bundle[i]] = off;
                else
                    head_off[bundle[i]] = off;
            }
        }
    }

    std::ostringstream os;
    const double w = 2.0 * st.margin + (maxx - minx) * st.scale, h = 2.0 * st.margin + (maxy - miny) * st.scale;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
    os << "<title>" << xml_escape(d.name) << "</title>\n";
    os << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
          "<path d=\"M0,1 L7,4 L0,7 z\" fill=\"black\"/></marker></defs>\n";
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.2\">\n";
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        double x0 = X(d.x[ed.tail]) + tail_off[e], y0 = Y(d.y[ed.tail]);
        // Screen y grows downward, so a positive math offset moves up.
        double bx = x0, by = Y(d.y[ed.head]) - head_off[e];
        double x1 = X(d.x[ed.head]), y1 = by;
        double r = std::min({st.bend_radius, std::abs(by - y0) / 2.0, std::abs(x1 - bx) / 2.0});
        int sv = by > y0 ? 1 : -1, sh = x1 > bx ? 1 : -1;
        int sweep = -sv * sh > 0 ? 1 : 0;
        os << "<path class=\"edge\" id=\"e" << e << "\" d=\"M" << num(x0) << "," << num(y0) << " L" << num(bx) << ","
           << num(by - sv * r) << " A" << num(r) << "," << num(r) << " 0 0 " << sweep << " " << num(bx + sh * r)
           << "," << num(by) << " L" << num(x1 - sh * st.vertex_radius) << "," << num(y1)
           << "\" marker-end=\"url(#arrow)\"/>\n";
    }
    os << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
    for (Vertex v = 0; v < n; ++v)
        os << "<circle cx=\"" << num(X(d.x[v])) << "\" cy=\"" << num(Y(d.y[v])) << "\" r=\"" << num(st.vertex_radius)
           << "\"/>\n";
    os << "</g>\n";
    if (st.labels) {
        os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
        for (Vertex v = 0; v < n; ++v) {
            std::string lab = g.label(v).empty() ? std::to_string(v) : g.label(v);
            os << "<text x=\"" << num(X(d.x[v]) + st.vertex_radius + 2) << "\" y=\""
               << num(Y(d.y[v]) + st.vertex_radius + 9) << "\">" << xml_escape(lab) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace lplanar
