#include "lplanar/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace lplanar {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.')) return false;
    return true;
}

// Lines with comments and surrounding blanks removed, paired with 1-based numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        out.emplace_back(no, line.substr(b, e - b + 1));
    }
    return out;
}

GraphFile parse_graph(const std::string& text, const std::string& source) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "empty input; expected 'digraph <name>'");
    auto head = split_ws(lines[0].second);
    if (head.size() != 2 || head[0] != "digraph" || !valid_name(head[1]))
        throw ParseError(source, lines[0].first, "expected header 'digraph <name>'");
    GraphFile gf;
    gf.graph.set_name(head[1]);
    auto vertex = [&](const std::string& name, int no) {
        if (!valid_name(name)) throw ParseError(source, no, "invalid vertex name '" + name + "'");
        if (auto v = gf.graph.vertex_by_label(name)) return *v;
        return gf.graph.add_vertex(name);
    };
    std::vector<std::pair<int, std::vector<std::string>>> order_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto w = split_ws(line);
        if (w[0] == "order:") {
            if (w.size() < 2) throw ParseError(source, no, "order line needs an owner vertex");
            order_lines.emplace_back(no, std::vector<std::string>(w.begin() + 1, w.end()));
            continue;
        }
        if (w.size() == 1) {
            vertex(w[0], no);
            continue;
        }
        if (w.size() != 3 || w[1] != "->") throw ParseError(source, no, "expected 'u -> v'");
        Vertex u = vertex(w[0], no), v = vertex(w[2], no);
        if (u == v) throw ParseError(source, no, "self-loop at '" + w[0] + "'");
        if (gf.graph.has_edge(u, v)) throw ParseError(source, no, "duplicate edge " + w[0] + " -> " + w[2]);
        gf.graph.add_edge(u, v);
    }
    for (const auto& [no, w] : order_lines) {
        auto owner = gf.graph.vertex_by_label(w[0]);
        if (!owner) throw ParseError(source, no, "unknown vertex '" + w[0] + "'");
        std::vector<Vertex> succ;
        for (std::size_t k = 1; k < w.size(); ++k) {
            auto v = gf.graph.vertex_by_label(w[k]);
            if (!v || !gf.graph.has_edge(*owner, *v))
                throw ParseError(source, no, "'" + w[k] + "' is not a successor of '" + w[0] + "'");
            succ.push_back(*v);
        }
        if (static_cast<int>(succ.size()) != gf.graph.out_degree(*owner))
            throw ParseError(source, no, "order line must list every successor of '" + w[0] + "'");
        gf.orders.emplace_back(*owner, std::move(succ));
    }
    return gf;
}

std::string write_graph(const DirectedGraph& g) {
    std::ostringstream o;
    o << "digraph " << g.name() << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) o << g.label(v) << "\n";
    for (const Edge& e : g.edges()) o << g.label(e.tail) << " -> " << g.label(e.head) << "\n";
    return o.str();
}

// Format:
//   embedding <name>
//   rot <v>: +w -u ...     clockwise; +w is the edge v->w, -u the edge u->v
//   outer: a>b b>c ...     darts of the outer face in traversal order
PlaneEmbedding parse_embedding(const DirectedGraph& g, const std::string& text, const std::string& source) {
    auto lines = content_lines(text);
    if (lines.empty() || split_ws(lines[0].second).size() != 2 || split_ws(lines[0].second)[0] != "embedding")
        throw ParseError(source, lines.empty() ? 1 : lines[0].first, "expected header 'embedding <name>'");
    std::vector<std::vector<EdgeId>> rot(g.num_vertices());
    std::vector<char> given(g.num_vertices(), 0);
    std::vector<Dart> outer_darts;
    int outer_line = 0;
    auto lookup = [&](const std::string& name, int no) {
        auto v = g.vertex_by_label(name);
        if (!v) throw ParseError(source, no, "unknown vertex '" + name + "'");
        return *v;
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto w = split_ws(line);
        if (w[0] == "rot") {
            if (w.size() < 2 || w[1].back() != ':') throw ParseError(source, no, "expected 'rot <v>: ...'");
            Vertex v = lookup(w[1].substr(0, w[1].size() - 1), no);
            if (given[v]) throw ParseError(source, no, "rotation of '" + g.label(v) + "' given twice");
            given[v] = 1;
            for (std::size_t k = 2; k < w.size(); ++k) {
                const std::string& tok = w[k];
                if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
                    throw ParseError(source, no, "rotation entry must be +name or -name");
                Vertex x = lookup(tok.substr(1), no);
                auto e = tok[0] == '+' ? g.find_edge(v, x) : g.find_edge(x, v);
                if (!e) throw ParseError(source, no, "no edge for rotation entry '" + tok + "'");
                rot[v].push_back(*e);
            }
        } else if (w[0] == "outer:") {
            if (w.size() < 2) throw ParseError(source, no, "outer face needs at least one dart");
            outer_darts.clear();
            for (std::size_t k = 1; k < w.size(); ++k) {
                auto gt = w[k].find('>');
                if (gt == std::string::npos) throw ParseError(source, no, "dart must be written a>b");
                Vertex a = lookup(w[k].substr(0, gt), no), b = lookup(w[k].substr(gt + 1), no);
                if (auto e = g.find_edge(a, b)) {
                    outer_darts.push_back(dart_of(*e, true));
                } else if (auto f = g.find_edge(b, a)) {
                    outer_darts.push_back(dart_of(*f, false));
                } else {
                    throw ParseError(source, no, "outer dart names no edge");
                }
            }
            outer_line = no;
        } else {
            throw ParseError(source, no, "unexpected line");
        }
    }
    PlaneEmbedding emb;
    try {
        emb = PlaneEmbedding(g, std::move(rot));
    } catch (const EmbeddingInvalid& ex) {
        throw ParseError(source, lines.back().first, ex.what());
    }
    if (!outer_darts.empty()) {
        int f = emb.face_of_dart(outer_darts.front());
        for (Dart d : outer_darts)
            if (emb.face_of_dart(d) != f) throw ParseError(source, outer_line, "outer darts do not lie on one face");
        emb.set_outer_face(f);
    }
    return emb;
}

std::string write_embedding(const DirectedGraph& g, const PlaneEmbedding& emb) {
    std::ostringstream o;
    o << "embedding " << g.name() << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        o << "rot " << g.label(v) << ":";
        for (EdgeId e : emb.rotation(v)) {
            const Edge& ed = g.edge(e);
            o << ' ' << (ed.tail == v ? '+' : '-') << g.label(ed.tail == v ? ed.head : ed.tail);
        }
        o << "\n";
    }
    if (emb.num_faces() > 0) {
        o << "outer:";
        for (Dart d : emb.face(emb.outer_face()))
            o << ' ' << g.label(emb.dart_origin(d)) << '>' << g.label(emb.dart_target(d));
        o << "\n";
    }
    return o.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) throw GraphError("cannot write '" + tmp + "'");
        o << content;
        if (!o.flush()) throw GraphError("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw GraphError("cannot rename onto '" + path + "'");
}

}  // namespace lplanar
