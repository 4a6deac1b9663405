#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "lplanar/bitonic.hpp"
#include "lplanar/io.hpp"
#include "lplanar/ldraw.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/planarity.hpp"
#include "lplanar/portcheck.hpp"
#include "lplanar/reduction.hpp"
#include "lplanar/variable.hpp"

namespace lplanar::cli {

namespace {

constexpr const char* kFormatTag = "lplanar-result/1";

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    std::string format = "text";
    std::string output{};
};

std::string load(Context& cx, const std::string& path) {
    if (path != "-") return read_file(path);
    std::ostringstream ss;
    ss << cx.in.rdbuf();
    return ss.str();
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

void emit(Context& cx, const std::string& text) {
    if (cx.output.empty() || cx.output == "-")
        cx.out << text;
    else
        write_file_atomic(cx.output, text);
}

bool structured(const Context& cx) { return cx.format == "structured"; }

const char* sign_name(SignClass c) {
    switch (c) {
        case SignClass::Zero: return "zero";
        case SignClass::Plus: return "plus";
        case SignClass::Minus: return "minus";
        case SignClass::Both: return "both";
    }
    return "?";
}

std::string vname(const DirectedGraph& g, Vertex v) { return v == kNone ? "-" : g.label(v); }

// Structured documents: "key: value" lines, with nested blocks framed by "<key>: begin/end".
class Doc {
public:
    explicit Doc(const std::string& command) { kv("format", kFormatTag), kv("command", command); }
    Doc& kv(const std::string& k, const std::string& v) {
        os_ << k << ": " << v << "\n";
        return *this;
    }
    Doc& kv(const std::string& k, long v) { return kv(k, std::to_string(v)); }
    Doc& line(const std::string& s) {
        os_ << s << "\n";
        return *this;
    }
    Doc& raw(const std::string& s) {
        os_ << s;
        return *this;
    }
    Doc& block(const std::string& k, const std::string& body) {
        os_ << k << ": begin\n" << body << k << ": end\n";
        return *this;
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
};

std::string order_lines(const DirectedGraph& g, const StOrdering& pi) {
    std::vector<Vertex> by(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) by[pi[v] - 1] = v;
    std::ostringstream os;
    for (std::size_t i = 0; i < by.size(); ++i) os << "rank " << i + 1 << " " << g.label(by[i]) << "\n";
    return os.str();
}

std::string edge_list(const DirectedGraph& g, const std::vector<std::pair<Vertex, Vertex>>& es,
                      const std::string& prefix) {
    std::ostringstream os;
    for (auto [a, b] : es) os << prefix << vname(g, a) << " " << vname(g, b) << "\n";
    return os.str();
}

int do_check_variable(Context& cx, const std::string& path, Mode mode, bool trace) {
    const char* cmd = mode == Mode::Bitonic ? "check-bitonic" : "check-monotone";
    auto gf = parse_graph(load(cx, path), source_name(path));
    const DirectedGraph& g = gf.graph;
    auto r = test_variable(g, mode, trace);
    if (structured(cx)) {
        Doc d(cmd);
        d.kv("graph", g.name()).kv("vertices", g.num_vertices()).kv("edges", g.num_edges());
        d.kv("verdict", r.accepted ? "accept" : "reject");
        if (!r.accepted) {
            d.kv("reason", reason_name(r.reason)).kv("node", r.reject_node);
            d.kv("vertex", vname(r.processed, r.reject_vertex)).kv("message", r.message);
        } else {
            d.kv("order", g.num_vertices()).raw(order_lines(g, r.pi));
            d.block("embedding", write_embedding(g, r.embedding));
            d.kv("augmentation", static_cast<long>(r.added_edges.size()));
            d.raw(edge_list(g, r.added_edges, "add "));
            if (trace) {
                d.kv("trace", static_cast<long>(r.trace.size()));
                for (const auto& t : r.trace) {
                    std::ostringstream os;
                    os << "node " << t.node << " kind=" << kind_char(t.kind) << " poles=" << vname(r.processed, t.s)
                       << "," << vname(r.processed, t.t) << " type=" << (t.type_m ? "M" : "B")
                       << " class=" << sign_name(t.sign_class) << " firsts=";
                    for (std::size_t i = 0; i < t.firsts.size(); ++i)
                        os << (i ? "," : "") << vname(r.processed, t.firsts[i]);
                    os << " last=" << vname(r.processed, t.last) << " mirror=" << (t.mirror ? 1 : 0);
                    d.line(os.str());
                }
            }
        }
        emit(cx, d.str());
    } else {
        std::ostringstream os;
        const char* what = mode == Mode::Bitonic ? "bitonic" : "monotone";
        if (!r.accepted) {
            os << g.name() << ": reject (no " << what << " pair: " << reason_name(r.reason);
            if (r.reject_vertex != kNone) os << " at " << vname(r.processed, r.reject_vertex);
            os << ")\n";
            if (!r.message.empty()) os << "  " << r.message << "\n";
        } else {
            os << g.name() << ": accept (" << what << " pair)\n";
            os << "order:";
            std::vector<Vertex> by(g.num_vertices());
            for (Vertex v = 0; v < g.num_vertices(); ++v) by[r.pi[v] - 1] = v;
            for (Vertex v : by) os << " " << g.label(v);
            os << "\n" << write_embedding(g, r.embedding);
            for (auto [a, b] : r.added_edges) os << "augment " << vname(g, a) << " -> " << vname(g, b) << "\n";
        }
        emit(cx, os.str());
    }
    return r.accepted ? kAccept : kReject;
}

PlaneEmbedding fixed_embedding(Context& cx, const GraphFile& gf, const std::string& emb_path) {
    const DirectedGraph& g = gf.graph;
    if (!emb_path.empty()) return parse_embedding(g, load(cx, emb_path), source_name(emb_path));
    if (gf.orders.empty()) throw GraphError("check-fixed needs an embedding file or 'order:' lines");
    std::vector<std::vector<Vertex>> lists(g.num_vertices());
    std::vector<bool> given(g.num_vertices(), false);
    for (const auto& [v, succ] : gf.orders) lists[v] = succ, given[v] = true;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!given[v])
            for (EdgeId e : g.out_edges(v)) lists[v].push_back(g.edge(e).head);
    return embedding_from_successor_lists(g, lists);
}

int do_check_fixed(Context& cx, const std::string& path, const std::string& emb_path, bool monotone) {
    auto gf = parse_graph(load(cx, path), source_name(path));
    const DirectedGraph& g = gf.graph;
    PlaneEmbedding emb = fixed_embedding(cx, gf, emb_path);
    auto r = test_bitonic_fixed(g, emb, monotone ? Mode::Monotone : Mode::Bitonic);
    if (structured(cx)) {
        Doc d("check-fixed");
        d.kv("graph", g.name()).kv("mode", monotone ? "monotone" : "bitonic");
        d.kv("verdict", r.accepted ? "accept" : "reject");
        if (r.accepted) {
            d.kv("order", g.num_vertices()).raw(order_lines(g, r.pi));
            d.kv("augmentation", static_cast<long>(r.added_edges.size())).raw(edge_list(g, r.added_edges, "add "));
        } else {
            d.kv("vertex", vname(g, r.witness));
        }
        emit(cx, d.str());
        return r.accepted ? kAccept : kReject;
    }
    std::ostringstream os;
    if (r.accepted) {
        os << g.name() << ": accept (fixed embedding, " << (monotone ? "monotone" : "bitonic") << ")\norder:";
        std::vector<Vertex> by(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) by[r.pi[v] - 1] = v;
        for (Vertex v : by) os << " " << g.label(v);
        os << "\n";
        for (auto [a, b] : r.added_edges) os << "augment " << vname(g, a) << " -> " << vname(g, b) << "\n";
    } else {
        os << g.name() << ": reject (successor list of " << vname(g, r.witness) << " cannot be split)\n";
    }
    emit(cx, os.str());
    return r.accepted ? kAccept : kReject;
}

int do_check_ports(Context& cx, const std::string& path, const std::string& emb_path, const std::string& lab_path) {
    auto gf = parse_graph(load(cx, path), source_name(path));
    const DirectedGraph& g = gf.graph;
    PlaneEmbedding emb = parse_embedding(g, load(cx, emb_path), source_name(emb_path));
    PortLabeling l = parse_labels(g, load(cx, lab_path), source_name(lab_path));
    auto r = check_port_feasibility(g, emb, l);
    auto edge_name = [&](EdgeId e) {
        return e == kNone ? std::string("-") : g.label(g.edge(e).tail) + "->" + g.label(g.edge(e).head);
    };
    std::ostringstream w;
    if (r.feasible) {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            for (std::size_t i = 0; i < r.witness.angle[v].size(); ++i)
                w << "angle " << g.label(v) << " " << i << " " << r.witness.angle[v][i] << " x=" << r.witness.x_vf[v][i]
                  << " face=" << emb.face_of_angle(v, static_cast<int>(i)) << "\n";
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            w << "bend " << g.label(g.edge(e).tail) << " " << g.label(g.edge(e).head)
              << " face=" << r.witness.convex_face[e] << " owner=" << vname(g, r.witness.owner[e]) << "\n";
    }
    if (structured(cx)) {
        Doc d("check-ports");
        d.kv("graph", g.name()).kv("verdict", r.feasible ? "accept" : "reject");
        if (r.feasible) {
            d.kv("outer_face", emb.outer_face()).block("witness", w.str());
        } else {
            d.kv("stage", failure_name(r.reason)).kv("vertex", vname(g, r.vertex)).kv("face", r.face);
            d.kv("edge", edge_name(r.edge)).kv("message", r.message);
        }
        emit(cx, d.str());
    } else {
        std::ostringstream os;
        if (r.feasible)
            os << g.name() << ": accept (ports realizable; outer face " << emb.outer_face() << ")\n" << w.str();
        else
            os << g.name() << ": reject (" << r.message << ")\n";
        emit(cx, os.str());
    }
    return r.feasible ? kAccept : kReject;
}

int do_draw(Context& cx, const std::string& path, bool monotone, const std::string& svg_path) {
    auto gf = parse_graph(load(cx, path), source_name(path));
    const DirectedGraph& g = gf.graph;
    auto r = test_variable(g, monotone ? Mode::Monotone : Mode::Bitonic);
    if (!r.accepted) {
        cx.err << g.name() << ": no upward" << (monotone ? "-rightward" : "") << " planar L-drawing ("
               << reason_name(r.reason) << ")\n";
        return kReject;
    }
    LDrawing d = monotone ? construct_upward_rightward_ldrawing(g, r.embedding, r.pi)
                          : construct_upward_ldrawing(g, r.embedding, r.pi);
    d.name = g.name();
    emit(cx, write_ldrawing(g, d));
    if (!svg_path.empty()) write_file_atomic(svg_path, render_svg(g, d));
    return kAccept;
}

int do_render(Context& cx, const std::string& path, const std::string& graph_path, const SvgStyle& style) {
    auto doc = parse_ldrawing_document(load(cx, path), source_name(path));
    DirectedGraph g;
    if (!graph_path.empty()) {
        g = parse_graph(load(cx, graph_path), source_name(graph_path)).graph;
        if (g.num_vertices() != doc.graph.num_vertices())
            throw GraphError("drawing has " + std::to_string(doc.graph.num_vertices()) + " vertices, graph has " +
                             std::to_string(g.num_vertices()));
    } else if (doc.has_edges) {
        g = doc.graph;
    } else {
        throw GraphError("drawing lists no edges; pass --graph");
    }
    auto rep = validate_ldrawing(g, doc.drawing, false);
    if (!rep.ok()) cx.err << "warning: drawing is not a planar L-drawing\n" << rep.to_string();
    emit(cx, render_svg(g, doc.drawing, style));
    return kAccept;
}

int do_reduce(Context& cx, const std::string& path, std::string roles_path) {
    auto inst = parse_hv(load(cx, path), source_name(path));
    auto red = reduce_hv(inst);
    emit(cx, write_graph(red.result.graph));
    if (roles_path.empty() && !cx.output.empty() && cx.output != "-") roles_path = cx.output + ".roles";
    if (!roles_path.empty()) write_file_atomic(roles_path, write_roles(red.result));
    return kAccept;
}

std::string edges_field(const DirectedGraph& g) {
    std::string s;
    for (const Edge& e : g.edges()) {
        if (!s.empty()) s += ',';
        s += std::to_string(e.tail) + ">" + std::to_string(e.head);
    }
    return s;
}

int do_sweep(Context& cx, int max_n, const std::string& check, int random_count, int rmin, int rmax,
             std::uint64_t seed) {
    if (check == "drawing" && max_n > 6) throw GraphError("drawing sweeps are limited to --max-n 6");
    if (max_n > 8) throw GraphError("exhaustive sweeps are limited to --max-n 8");
    std::ostringstream os;
    os << "# check=" << check << " max_n=" << max_n << " random=" << random_count << " seed=" << seed << "\n";
    os << "n\tm\tedges\talgorithm\toracle\tstatus\n";
    long total = 0, mismatches = 0;
    auto verdicts = [&](const DirectedGraph& g) {
        if (check == "bitonic") return std::pair{test_bitonic_variable(g).accepted, brute_force_bitonic_pair(g).found};
        if (check == "monotone")
            return std::pair{test_monotone_variable(g).accepted, brute_force_monotone_pair(g).found};
        return std::pair{test_bitonic_variable(g).accepted, brute_force_upward_ldrawing_exists(g)};
    };
    auto record = [&](const DirectedGraph& g) {
        auto [a, o] = verdicts(g);
        ++total;
        mismatches += a != o;
        os << g.num_vertices() << "\t" << g.num_edges() << "\t" << edges_field(g) << "\t" << (a ? "yes" : "no")
           << "\t" << (o ? "yes" : "no") << "\t" << (a == o ? "ok" : "MISMATCH") << "\n";
    };
    for (int n = 2; n <= max_n; ++n) for_each_small_st_graph(n, record);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        int n = rmin + static_cast<int>(rng() % static_cast<std::uint64_t>(rmax - rmin + 1));
        record(random_planar_st_graph(n, rng));
    }
    os << "# total=" << total << " mismatches=" << mismatches << "\n";
    emit(cx, os.str());
    return mismatches == 0 ? kAccept : kReject;
}

int do_modality(Context& cx, const std::string& path, const std::string& emb_path, bool min_over) {
    auto gf = parse_graph(load(cx, path), source_name(path));
    const DirectedGraph& g = gf.graph;
    Doc d("modality");
    std::ostringstream os;
    d.kv("graph", g.name());
    int verdict_value;
    if (min_over) {
        verdict_value = min_modality_over_embeddings(g);
        d.kv("min_max_modality", verdict_value);
        os << g.name() << ": minimum over embeddings of the maximum modality is " << verdict_value << "\n";
    } else {
        PlaneEmbedding emb;
        if (!emb_path.empty()) {
            emb = parse_embedding(g, load(cx, emb_path), source_name(emb_path));
        } else if (!is_planar(g)) {
            d.kv("planar", "no").kv("four_modal", "no");
            emit(cx, structured(cx) ? d.str() : g.name() + ": not planar\n");
            return kReject;
        } else {
            emb = planar_embed(g);
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            int k = modality(g, emb, v);
            d.line("vertex " + g.label(v) + " " + std::to_string(k));
            os << g.label(v) << ": " << k << "\n";
        }
        verdict_value = max_modality(g, emb);
        d.kv("max_modality", verdict_value);
        os << "max modality " << verdict_value << "\n";
    }
    const bool ok = verdict_value <= 4;
    d.kv("four_modal", ok ? "yes" : "no");
    os << (ok ? "4-modal: yes\n" : "4-modal: no (no planar L-drawing)\n");
    emit(cx, structured(cx) ? d.str() : os.str());
    return ok ? kAccept : kReject;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planar L-drawings of directed graphs: decide, draw, render, reduce, sweep.", "lplanar"};
    app.require_subcommand(1, 1);
    Context cx{in, out, err};
    auto fmt = [&](CLI::App* s) {
        s->add_option("--format", cx.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
    };
    auto outp = [&](CLI::App* s) { s->add_option("-o,--output", cx.output, "output file (written atomically)"); };

    std::string graph, embedding, labels, svg, roles, gpath, check = "bitonic";
    bool trace = false, monotone = false, min_over = false, no_labels = false;
    int max_n = 7, random_count = 0, rmin = 8, rmax = 12;
    std::uint64_t seed = 0;
    SvgStyle style;

    auto* cb = app.add_subcommand("check-bitonic", "decide whether a bitonic pair exists (upward planar L-drawing)");
    auto* cm = app.add_subcommand("check-monotone", "decide whether a monotone pair exists (upward-rightward)");
    for (auto* s : {cb, cm}) {
        s->add_option("graph", graph, "graph file or -")->required();
        s->add_flag("--trace", trace, "include the per-node trace");
        fmt(s), outp(s);
    }
    auto* cf = app.add_subcommand("check-fixed", "test a fixed upward embedding");
    cf->add_option("graph", graph)->required();
    cf->add_option("embedding", embedding, "embedding file; else the graph's order: lines");
    cf->add_flag("--monotone", monotone);
    fmt(cf), outp(cf);
    auto* cp = app.add_subcommand("check-ports", "test a fixed embedding with fixed ports");
    cp->add_option("graph", graph)->required();
    cp->add_option("embedding", embedding)->required();
    cp->add_option("labels", labels)->required();
    fmt(cp), outp(cp);
    auto* dr = app.add_subcommand("draw", "construct an upward planar L-drawing");
    dr->add_option("graph", graph)->required();
    dr->add_flag("--monotone", monotone, "upward-rightward drawing");
    dr->add_option("--svg", svg, "also write an SVG rendering");
    fmt(dr), outp(dr);
    auto* rd = app.add_subcommand("render", "render a drawing file as SVG");
    rd->add_option("drawing", graph, "drawing file or -")->required();
    rd->add_option("--graph", gpath, "graph file, when the drawing lists no edges");
    rd->add_option("--scale", style.scale)->capture_default_str();
    rd->add_option("--overlap-offset", style.overlap_offset)->capture_default_str();
    rd->add_flag("--no-labels", no_labels);
    outp(rd);
    auto* rc = app.add_subcommand("reduce", "build the L-drawing instance of an HV instance");
    rc->add_option("hv", graph, "HV instance file or -")->required();
    rc->add_option("--roles", roles, "role sidecar path (default: <output>.roles)");
    outp(rc);
    auto* orc = app.add_subcommand("oracle", "exhaustive cross-checks");
    orc->require_subcommand(1, 1);
    auto* sw = orc->add_subcommand("sweep", "compare decisions with brute force on small st-graphs");
    sw->add_option("--max-n", max_n)->capture_default_str();
    sw->add_option("--check", check)->check(CLI::IsMember({"bitonic", "monotone", "drawing"}))->capture_default_str();
    sw->add_option("--random", random_count, "extra seeded random graphs")->capture_default_str();
    sw->add_option("--random-min-n", rmin)->capture_default_str();
    sw->add_option("--random-max-n", rmax)->capture_default_str();
    sw->add_option("--seed", seed)->capture_default_str();
    fmt(sw), outp(sw);
    auto* md = app.add_subcommand("modality", "vertex modalities and the 4-modal prefilter");
    md->add_option("graph", graph)->required();
    md->add_option("--embedding", embedding);
    md->add_flag("--min-over-embeddings", min_over);
    fmt(md), outp(md);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kAccept : kInputError;
    }
    style.labels = !no_labels;
    try {
        if (cb->parsed()) return do_check_variable(cx, graph, Mode::Bitonic, trace);
        if (cm->parsed()) return do_check_variable(cx, graph, Mode::Monotone, trace);
        if (cf->parsed()) return do_check_fixed(cx, graph, embedding, monotone);
        if (cp->parsed()) return do_check_ports(cx, graph, embedding, labels);
        if (dr->parsed()) return do_draw(cx, graph, monotone, svg);
        if (rd->parsed()) return do_render(cx, graph, gpath, style);
        if (rc->parsed()) return do_reduce(cx, graph, roles);
        if (sw->parsed()) return do_sweep(cx, max_n, check, random_count, rmin, rmax, seed);
        if (md->parsed()) return do_modality(cx, graph, embedding, min_over);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace lplanar::cli
