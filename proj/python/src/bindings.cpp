#include "circlegraph/circle_aut.hpp"
#include "circlegraph/cli.hpp"
#include "circlegraph/recognition.hpp"
#include "circlegraph/rado.hpp"
#include "circlegraph/svg.hpp"
#include "circlegraph/text_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace circlegraph;

namespace {

// Points cross the boundary as reduced "p/q" strings so Python can use
// fractions.Fraction without losing exactness.
CirclePoint point(const std::string& s) { return CirclePoint::parse(s); }

IntersectionMode mode_from(const std::string& s) {
  if (s == "closed") return IntersectionMode::Closed;
  if (s == "crossing") return IntersectionMode::CrossingOnly;
  throw std::invalid_argument("mode must be 'closed' or 'crossing'");
}

RecognitionMethod method_from(const std::string& s) {
  if (s == "brute") return RecognitionMethod::Brute;
  if (s == "obstruction") return RecognitionMethod::Obstruction;
  if (s == "both") return RecognitionMethod::Both;
  throw std::invalid_argument("method must be 'brute', 'obstruction' or 'both'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OracleDisagreement>(m, "OracleDisagreement", PyExc_RuntimeError);

  m.def("cyclic_between", [](const std::string& a, const std::string& b, const std::string& c) {
    return cyclic_between(point(a), point(b), point(c));
  });
  m.def("interleaves", [](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    return interleaves({point(a), point(b)}, {point(c), point(d)});
  });
  m.def("insert_between",
        [](const std::string& a, const std::string& b) { return insert_between(point(a), point(b)).str(); });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>())
      .def(py::init<int, std::vector<std::string>>())
      .def("__len__", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("name", &Graph::name)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__str__", &format_graph);

  m.def("parse_graph", [](const std::string& s) { return parse_graph(s); });
  m.def("format_graph", &format_graph);
  m.def("local_complement", &local_complement);
  m.def("delete_vertex", &delete_vertex);
  m.def("isomorphic", &isomorphic);
  m.def("automorphisms", &automorphisms);
  m.def("canonical_form", [](const Graph& g) { return canonical_form(g).hex(); });
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("wheel_graph", &wheel_graph);

  py::class_<ChordDiagram>(m, "ChordDiagram")
      .def(py::init<>())
      .def("add", [](ChordDiagram& d, const std::string& name, const std::string& a,
                     const std::string& b) { d.add(name, Chord(point(a), point(b))); })
      .def("__len__", &ChordDiagram::size)
      .def("names", &ChordDiagram::names)
      .def("chords",
           [](const ChordDiagram& d) {
             std::vector<std::tuple<std::string, std::string, std::string>> out;
             for (const auto& c : d.chords()) out.emplace_back(c.name, c.chord.lo().str(), c.chord.hi().str());
             return out;
           })
      .def("is_generic", &ChordDiagram::is_generic)
      .def("__eq__", [](const ChordDiagram& a, const ChordDiagram& b) { return a == b; })
      .def("__str__", &format_diagram);

  m.def("parse_diagram", [](const std::string& s) { return parse_diagram(s); });
  m.def("format_diagram", &format_diagram);
  m.def(
      "intersection_graph",
      [](const ChordDiagram& d, const std::string& mode) { return intersection_graph(d, mode_from(mode)); },
      py::arg("diagram"), py::arg("mode") = "closed");
  m.def("to_word", [](const ChordDiagram& d) { return to_word(d).letters(); });
  m.def("embed_word", [](const std::vector<std::string>& w) { return embed_word(DOWord(w)); });
  m.def("interlacement_graph", [](const std::vector<std::string>& w) { return DOWord(w).interlacement_graph(); });
  m.def("reembed_incremental", &reembed_incremental);
  m.def("blow_up", &blow_up);
  m.def("flip_interval", &flip_interval);
  m.def("render_svg", &render_svg);

  m.def("realize", [](const Graph& g) -> std::optional<std::vector<std::string>> {
    auto w = realize_brute_force(g);
    if (!w) return std::nullopt;
    return w->letters();
  });
  m.def(
      "is_circle_graph",
      [](const Graph& g, const std::string& method) {
        auto v = is_circle_graph(g, method_from(method));
        py::dict out;
        out["is_circle"] = v.is_circle;
        out["word"] = v.witness ? py::cast(v.witness->letters()) : py::none();
        out["obstruction"] = v.obstruction ? py::cast(*v.obstruction) : py::none();
        out["trace"] = v.trace ? py::cast(v.trace->str(g)) : py::none();
        return out;
      },
      py::arg("graph"), py::arg("method") = "both");
  m.def("has_vertex_minor", [](const Graph& g, const Graph& h) -> std::optional<std::string> {
    auto match = has_vertex_minor(g, h);
    if (!match) return std::nullopt;
    return match->trace.str(g);
  });
  m.def("vertex_minor_closure", [](const Graph& g, int min_vertices) {
    std::vector<std::string> out;
    for (const auto& cf : vertex_minor_closure(g, min_vertices)) out.push_back(cf.hex());
    return out;
  }, py::arg("graph"), py::arg("min_vertices") = 0);

  m.def("class_preserving_automorphisms", &class_preserving_automorphisms);
  m.def("lift_automorphism", [](const ChordDiagram& d, const Permutation& h) -> py::object {
    auto r = lift_automorphism(d, h);
    if (!r) return py::cast(r.failure->describe(d));
    py::dict out;
    for (const auto& [x, y] : *r.lift) out[py::str(x.str())] = y.str();
    return std::move(out);
  });

  m.def("bit_graph", &bit_graph);
  m.def("bit_witness", &bit_witness);
  m.def("extension_witness", &extension_witness);
  m.def("locomp_witness_sets", &locomp_witness_sets);
  m.def("check_extension", [](const Graph& g, const VertexSet& ground) { return check_extension(g, ground).pass; });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
