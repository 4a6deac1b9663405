#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli/cli.hpp"
#include "lplanar/io.hpp"
#include "lplanar/ldraw.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/portcheck.hpp"
#include "lplanar/reduction.hpp"
#include "lplanar/variable.hpp"

namespace py = pybind11;
using namespace lplanar;

namespace {

py::dict drawing_dict(const DirectedGraph& g, const LDrawing& d) {
    py::dict pos;
    for (Vertex v = 0; v < g.num_vertices(); ++v) pos[py::str(g.label(v))] = py::make_tuple(d.x[v], d.y[v]);
    return pos;
}

py::dict verdict(const DirectedGraph& g, Mode mode) {
    auto r = test_variable(g, mode);
    py::dict out;
    out["accepted"] = r.accepted;
    if (r.accepted) {
        py::dict rank;
        for (Vertex v = 0; v < g.num_vertices(); ++v) rank[py::str(g.label(v))] = r.pi[v];
        out["rank"] = rank;
        out["embedding"] = write_embedding(g, r.embedding);
    } else {
        out["reason"] = std::string(reason_name(r.reason));
        out["message"] = r.message;
    }
    return out;
}

LDrawing drawing_from(const DirectedGraph& g, py::dict pos) {
    LDrawing d;
    d.name = g.name();
    d.x.resize(g.num_vertices());
    d.y.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto p = pos[py::str(g.label(v))].cast<std::pair<int, int>>();
        d.x[v] = p.first;
        d.y[v] = p.second;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the lplanar library";

    auto graph_error = py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", graph_error.ptr());

    py::class_<DirectedGraph>(m, "DirectedGraph")
        .def(py::init<>())
        .def(py::init<int, std::string>(), py::arg("n"), py::arg("name") = "g")
        .def("add_vertex", &DirectedGraph::add_vertex, py::arg("label") = "")
        .def("add_edge", [](DirectedGraph& g, Vertex u, Vertex v) { return g.add_edge(u, v); })
        .def_property_readonly("num_vertices", &DirectedGraph::num_vertices)
        .def_property_readonly("num_edges", &DirectedGraph::num_edges)
        .def_property_readonly("name", &DirectedGraph::name)
        .def("label", &DirectedGraph::label)
        .def("edges",
             [](const DirectedGraph& g) {
                 std::vector<std::pair<Vertex, Vertex>> es;
                 for (const auto& e : g.edges()) es.emplace_back(e.tail, e.head);
                 return es;
             })
        .def("has_edge", &DirectedGraph::has_edge)
        .def("__repr__", [](const DirectedGraph& g) {
            return "<DirectedGraph " + g.name() + " n=" + std::to_string(g.num_vertices()) +
                   " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text).graph; }, py::arg("text"));
    m.def("write_graph", &write_graph);

    m.def("check_bitonic", [](const DirectedGraph& g) { return verdict(g, Mode::Bitonic); },
          "Upward planar L-drawability over all embeddings.");
    m.def("check_monotone", [](const DirectedGraph& g) { return verdict(g, Mode::Monotone); },
          "Upward-rightward planar L-drawability over all embeddings.");

    m.def(
        "draw",
        [](const DirectedGraph& g, bool monotone) -> py::object {
            auto r = test_variable(g, monotone ? Mode::Monotone : Mode::Bitonic);
            if (!r.accepted) return py::none();
            auto d = monotone ? construct_upward_rightward_ldrawing(g, r.embedding, r.pi)
                              : construct_upward_ldrawing(g, r.embedding, r.pi);
            return drawing_dict(g, d);
        },
        py::arg("graph"), py::arg("monotone") = false, "Vertex coordinates keyed by label, or None.");

    m.def(
        "render_svg", [](const DirectedGraph& g, py::dict pos) { return render_svg(g, drawing_from(g, pos)); },
        py::arg("graph"), py::arg("positions"));

    m.def(
        "check_ports",
        [](const DirectedGraph& g, const std::string& embedding, const std::string& labels) {
            auto emb = parse_embedding(g, embedding);
            auto r = check_port_feasibility(g, emb, parse_labels(g, labels));
            py::dict out;
            out["feasible"] = r.feasible;
            if (r.feasible) {
                out["angles"] = r.witness.angle;
            } else {
                out["stage"] = std::string(failure_name(r.reason));
                out["message"] = r.message;
            }
            return out;
        },
        py::arg("graph"), py::arg("embedding"), py::arg("labels"));

    m.def(
        "reduce_hv",
        [](const std::string& text) {
            auto red = reduce_hv(parse_hv(text));
            return py::make_tuple(write_graph(red.result.graph), write_roles(red.result));
        },
        py::arg("text"), "Returns (graph text, roles text).");

    m.def("min_modality", [](const DirectedGraph& g) { return min_modality_over_embeddings(g); });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command line tool in process: (exit code, stdout, stderr).");
}
