#include "circlegraph/cli.hpp"

#include "circlegraph/acceptance.hpp"
#include "circlegraph/circle_aut.hpp"
#include "circlegraph/rado.hpp"
#include "circlegraph/recognition.hpp"
#include "circlegraph/svg.hpp"
#include "circlegraph/text_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace circlegraph {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

IntersectionMode parse_mode(const std::string& s) {
  if (s == "closed") return IntersectionMode::Closed;
  if (s == "crossing") return IntersectionMode::CrossingOnly;
  throw UsageError("unknown mode '" + s + "' (expected closed or crossing)");
}

RecognitionMethod parse_method(const std::string& s) {
  if (s == "brute") return RecognitionMethod::Brute;
  if (s == "obstruction") return RecognitionMethod::Obstruction;
  if (s == "both") return RecognitionMethod::Both;
  throw UsageError("unknown method '" + s + "' (expected brute, obstruction or both)");
}

Vertex parse_vertex(const std::string& s, const Graph& g) {
  auto set = parse_vertex_set(s);
  if (set.size() != 1) throw UsageError("expected a single vertex, got '" + s + "'");
  Vertex v = *set.begin();
  if (v >= g.size()) throw UsageError("vertex " + s + " out of range");
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chord diagrams, circle graphs and local complementation", "circlegraph"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string mode = "closed";
  std::string method = "both";
  std::string chord_name;
  std::string vertex;
  std::string perm;
  std::string u_text;
  std::string w_text;
  std::string ground_text;
  std::string output_path;
  std::string obstruction_name;
  int min_vertices = 0;
  int bit_n = -1;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "input file, or - for stdin")->required();
    return sub;
  };

  auto* ig = with_input(app.add_subcommand("ig", "intersection graph of a diagram"));
  ig->add_option("--mode", mode, "closed or crossing")->capture_default_str();
  auto* locomp = with_input(app.add_subcommand("locomp", "local complementation of a graph"));
  locomp->add_option("--vertex", vertex, "vertex index")->required();
  auto* flip = with_input(app.add_subcommand("flip", "flip the interval of a chord"));
  flip->add_option("--chord", chord_name, "chord name")->required();
  auto* blowup = with_input(app.add_subcommand("blowup", "blow up shared endpoints into crossings"));
  auto* embed = with_input(app.add_subcommand("embed", "uniform diagram realizing a word"));
  auto* reembed = with_input(app.add_subcommand("reembed", "incremental rational re-embedding"));
  auto* word = with_input(app.add_subcommand("word", "double occurrence word of a generic diagram"));
  auto* realize = with_input(app.add_subcommand("realize", "search a word realizing a graph"));
  auto* check_circle = with_input(app.add_subcommand("check-circle", "circle graph recognition"));
  check_circle->add_option("--method", method, "brute, obstruction or both")->capture_default_str();
  auto* vminors = with_input(app.add_subcommand("vminors", "canonical forms of all vertex minors"));
  vminors->add_option("--min-vertices", min_vertices, "smallest minor size to explore")->capture_default_str();
  auto* has_vminor = with_input(app.add_subcommand("has-vminor", "is the second graph a vertex minor of the first"));
  auto* auts = with_input(app.add_subcommand("auts", "automorphisms of a graph"));
  auto* classes = with_input(app.add_subcommand("classes", "incident and crossing edges of a diagram"));
  auto* lift = with_input(app.add_subcommand("lift", "lift a graph automorphism to endpoints"));
  lift->add_option("--perm", perm, "permutation of chord names in cycle notation")->required();
  auto* rado_witness = app.add_subcommand("rado-witness", "least BIT-graph extension witness");
  rado_witness->add_option("--u", u_text, "comma-separated vertex set U");
  rado_witness->add_option("--w", w_text, "comma-separated vertex set W");
  auto* witness_sets = with_input(app.add_subcommand("locomp-witness-sets", "transported witness sets"));
  witness_sets->add_option("--vertex", vertex, "complemented vertex")->required();
  witness_sets->add_option("--u", u_text, "comma-separated vertex set U");
  witness_sets->add_option("--w", w_text, "comma-separated vertex set W");
  auto* check_ext = app.add_subcommand("check-extension", "extension property over a ground set");
  check_ext->add_option("input", input, "graph file, or - for stdin");
  check_ext->add_option("--bit-graph", bit_n, "use the BIT graph on n vertices instead of a file");
  check_ext->add_option("--ground", ground_text, "comma-separated ground set");
  auto* render = with_input(app.add_subcommand("render", "SVG drawing of a diagram"));
  render->add_option("-o,--output", output_path, "output SVG file (default stdout)");
  auto* obstr = app.add_subcommand("obstructions", "print the forbidden vertex minors");
  obstr->add_option("--name", obstruction_name, "W5, W7 or BW3");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    auto input_text = [&] { return read_input(input, in); };

    if (ig->parsed()) {
      out << format_graph(intersection_graph(parse_diagram(input_text()), parse_mode(mode)));
    } else if (locomp->parsed()) {
      Graph g = parse_graph(input_text());
      out << format_graph(local_complement(g, parse_vertex(vertex, g)));
    } else if (flip->parsed()) {
      ChordDiagram d = parse_diagram(input_text());
      if (!d.index_of(chord_name)) throw UsageError("unknown chord '" + chord_name + "'");
      if (!d.is_generic()) throw UsageError("flip needs a diagram in generic position");
      out << format_diagram(flip_interval(d, chord_name));
    } else if (blowup->parsed()) {
      out << format_diagram(blow_up(parse_diagram(input_text())));
    } else if (embed->parsed()) {
      out << format_diagram(embed_word(parse_word(input_text())));
    } else if (reembed->parsed()) {
      out << format_diagram(reembed_incremental(parse_diagram(input_text())));
    } else if (word->parsed()) {
      ChordDiagram d = parse_diagram(input_text());
      if (!d.is_generic()) throw UsageError("word needs a diagram in generic position");
      out << format_word(to_word(d));
    } else if (realize->parsed()) {
      Graph g = parse_graph(input_text());
      if (g.size() > kMaxSearchVertices) throw UsageError("realize supports at most 8 vertices");
      if (auto w = realize_brute_force(g)) {
        out << format_word(*w);
      } else {
        out << "NOT_CIRCLE\n";
        return kExitNegative;
      }
    } else if (check_circle->parsed()) {
      Graph g = parse_graph(input_text());
      if (g.size() > kMaxSearchVertices) throw UsageError("check-circle supports at most 8 vertices");
      CircleVerdict v;
      try {
        v = is_circle_graph(g, parse_method(method));
      } catch (const OracleDisagreement& e) {
        err << "error: ORACLE DISAGREEMENT: " << e.what() << "\n";
        return kExitError;
      }
      out << (v.is_circle ? "CIRCLE\n" : "NOT_CIRCLE\n");
      if (v.witness) out << "word: " << v.witness->str() << "\n";
      if (v.obstruction) out << "obstruction: " << *v.obstruction << "\ntrace: " << v.trace->str(g) << "\n";
      return v.is_circle ? kExitOk : kExitNegative;
    } else if (vminors->parsed()) {
      Graph g = parse_graph(input_text());
      if (g.size() > kMaxSearchVertices) throw UsageError("vminors supports at most 8 vertices");
      for (const auto& cf : vertex_minor_closure(g, min_vertices)) out << cf.hex() << "\n";
    } else if (has_vminor->parsed()) {
      auto graphs = parse_graphs(input_text());
      if (graphs.size() != 2) throw UsageError("has-vminor expects two graphs in one file");
      if (graphs[0].size() > kMaxSearchVertices) throw UsageError("has-vminor supports at most 8 vertices");
      auto match = has_vertex_minor(graphs[0], graphs[1]);
      if (!match) {
        out << "NO_VERTEX_MINOR\n";
        return kExitNegative;
      }
      out << "VERTEX_MINOR\ntrace: " << match->trace.str(graphs[0]) << "\n";
      out << "kept:";
      for (Vertex v = 0; v < match->minor.size(); ++v) out << " " << match->minor.name(v) << "->" << match->to_h[static_cast<std::size_t>(v)];
      out << "\n";
    } else if (auts->parsed()) {
      Graph g = parse_graph(input_text());
      if (g.size() > kMaxAutomorphismVertices) throw UsageError("auts supports at most 10 vertices");
      std::vector<std::string> names;
      for (Vertex v = 0; v < g.size(); ++v) names.push_back(g.name(v));
      for (const auto& p : automorphisms(g)) out << format_permutation(p, names) << "\n";
    } else if (classes->parsed()) {
      ChordDiagram d = parse_diagram(input_text());
      auto ec = edge_classes(d);
      std::vector<std::tuple<int, int, const char*>> rows;
      for (auto [i, j] : ec.incident) rows.emplace_back(i, j, "incident");
      for (auto [i, j] : ec.crossing) rows.emplace_back(i, j, "crossing");
      std::sort(rows.begin(), rows.end());
      for (const auto& [i, j, kind] : rows) out << kind << " " << d[i].name << " " << d[j].name << "\n";
    } else if (lift->parsed()) {
      ChordDiagram d = parse_diagram(input_text());
      Permutation h = parse_permutation(perm, d.names());
      LiftResult r;
      try {
        r = lift_automorphism(d, h);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!r) {
        out << "NO_LIFT\nwitness: " << r.failure->describe(d) << "\n";
        return kExitNegative;
      }
      out << "LIFT\n";
      for (const auto& [x, y] : *r.lift) out << x.str() << " -> " << y.str() << "\n";
    } else if (rado_witness->parsed()) {
      auto u = parse_vertex_set(u_text);
      auto w = parse_vertex_set(w_text);
      try {
        out << bit_witness(u, w) << "\n";
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (witness_sets->parsed()) {
      Graph g = parse_graph(input_text());
      auto u = parse_vertex_set(u_text);
      auto w = parse_vertex_set(w_text);
      Vertex v = parse_vertex(vertex, g);
      for (int x : u) if (x >= g.size()) throw UsageError("U vertex out of range");
      for (int x : w) if (x >= g.size()) throw UsageError("W vertex out of range");
      try {
        auto [up, wp] = locomp_witness_sets(g, v, u, w);
        out << "U'={" << format_vertex_set(up) << "}\nW'={" << format_vertex_set(wp) << "}\n";
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (check_ext->parsed()) {
      Graph g;
      if (bit_n >= 0) {
        if (bit_n > Graph::kMaxVertices) throw UsageError("--bit-graph supports at most 64 vertices");
        g = bit_graph(bit_n);
      } else {
        g = parse_graph(input_text());
      }
      auto ground = parse_vertex_set(ground_text);
      for (int x : ground) if (x >= g.size()) throw UsageError("ground vertex out of range");
      auto report = check_extension(g, ground);
      out << report.str();
      return report.pass ? kExitOk : kExitNegative;
    } else if (render->parsed()) {
      std::string svg = render_svg(parse_diagram(input_text()));
      if (output_path.empty()) {
        out << svg;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + output_path + "'");
        file << svg;
      }
    } else if (obstr->parsed()) {
      bool found = false;
      for (const auto& o : obstructions()) {
        if (!obstruction_name.empty() && o.name != obstruction_name) continue;
        found = true;
        out << "# " << o.name << "\n" << format_graph(o.graph);
      }
      if (!found) throw UsageError("unknown obstruction '" + obstruction_name + "'");
    } else if (selftest->parsed()) {
      auto results = run_acceptance(out);
      bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
      out << (ok ? "PASS\n" : "FAIL\n");
      return ok ? kExitOk : kExitNegative;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace circlegraph
