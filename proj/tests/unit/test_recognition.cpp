#include "circlegraph/recognition.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <map>

using namespace circlegraph;

namespace {

// Interlacement read straight off letter positions: x and y alternate iff
// exactly one occurrence of y falls between the two occurrences of x.
bool interlaced(const std::vector<std::string>& w, const std::string& x, const std::string& y) {
  std::vector<std::size_t> px, py;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == x) px.push_back(i);
    if (w[i] == y) py.push_back(i);
  }
  int inside = 0;
  for (auto p : py) inside += (px[0] < p && p < px[1]);
  return inside == 1;
}

// The word realizes g exactly, vertex names matched to letters.
bool realizes(const DOWord& w, const Graph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (interlaced(w.letters(), g.name(u), g.name(v)) != g.adjacent(u, v)) return false;
  return static_cast<int>(w.letters().size()) == 2 * g.size();
}

Graph graph_from_mask(int n, unsigned mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (mask >> bit & 1U) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("brute-force realization") {
  auto k4 = realize_brute_force(complete_graph(4));
  REQUIRE(k4);
  CHECK(k4->str() == "a b c d a b c d");
  CHECK_FALSE(realize_brute_force(wheel_graph(5)));
  auto p4 = realize_brute_force(path_graph(4));
  REQUIRE(p4);
  CHECK(realizes(*p4, path_graph(4)));
  auto empty = realize_brute_force(Graph(0));
  REQUIRE(empty);
  CHECK(empty->letters().empty());
  CHECK_THROWS(realize_brute_force(Graph(kMaxSearchVertices + 1)));
}

TEST_CASE("vertex-minor closure") {
  auto c5 = vertex_minor_closure(cycle_graph(5));
  CHECK(c5.count(canonical_form(path_graph(4))) == 1);
  auto p3 = vertex_minor_closure(path_graph(3));
  CHECK(p3.count(canonical_form(complete_graph(3))) == 1);
  CHECK(vertex_minor_closure(Graph(1)) == std::set<CanonicalForm>{canonical_form(Graph(1)), canonical_form(Graph(0))});
  // min_vertices cuts off small minors.
  for (const auto& cf : vertex_minor_closure(cycle_graph(5), 4)) CHECK(cf.n >= 4);
  CHECK_THROWS(vertex_minor_closure(Graph(kMaxCanonicalVertices + 1)));
}

TEST_CASE("has_vertex_minor") {
  auto c5 = has_vertex_minor(cycle_graph(5), path_graph(4));
  REQUIRE(c5);
  REQUIRE(c5->trace.steps.size() == 1);
  CHECK(c5->trace.steps[0].kind == MinorStep::Kind::DeleteVertex);

  auto p3 = has_vertex_minor(path_graph(3), complete_graph(3));
  REQUIRE(p3);
  REQUIRE(p3->trace.steps.size() == 1);
  CHECK(p3->trace.steps[0].kind == MinorStep::Kind::LocalComplement);
  CHECK(p3->trace.str(path_graph(3)) == "lc(b)");

  CHECK_FALSE(has_vertex_minor(complete_graph(3), complete_graph(4)));
  CHECK(has_vertex_minor(cycle_graph(5), cycle_graph(5))->trace.str(cycle_graph(5)) == "identity");
}

TEST_CASE("obstruction table") {
  const auto& obs = obstructions();
  REQUIRE(obs.size() == 3);
  CHECK(obs[0].name == "W5");
  CHECK(obs[0].graph == wheel_graph(5));
  CHECK(obs[1].name == "W7");
  CHECK(obs[1].graph == wheel_graph(7));
  CHECK(obs[2].name == "BW3");
  CHECK(obs[2].graph.size() == 7);
  CHECK(obs[2].graph.edge_count() == 9);
  // The table is trusted only because the word search cannot realize any entry.
  for (const auto& o : obs) CHECK_FALSE(realize_brute_force(o.graph));
  // BW3: wheel on 3 rim vertices with every rim edge subdivided.
  for (Vertex rim = 1; rim <= 3; ++rim) CHECK(obs[2].graph.adjacent(0, rim));
  for (Vertex mid = 4; mid <= 6; ++mid) CHECK(obs[2].graph.degree(mid) == 2);
}

TEST_CASE("circle graph recognition") {
  // Every graph on at most 5 vertices is a circle graph.
  for (int n = 0; n <= 5; ++n) {
    std::set<CanonicalForm> seen;
    for (unsigned mask = 0; mask < (1U << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      if (!seen.insert(canonical_form(g)).second) continue;
      auto v = is_circle_graph(g, RecognitionMethod::Brute);
      CHECK(v.is_circle);
      REQUIRE(v.witness);
      CHECK(realizes(*v.witness, g));
    }
  }

  auto w5 = is_circle_graph(wheel_graph(5), RecognitionMethod::Both);
  CHECK_FALSE(w5.is_circle);
  CHECK(w5.obstruction == "W5");
  REQUIRE(w5.trace);
  CHECK(w5.trace->steps.empty());

  auto c6 = is_circle_graph(cycle_graph(6), RecognitionMethod::Both);
  CHECK(c6.is_circle);
  REQUIRE(c6.witness);
  CHECK(realizes(*c6.witness, cycle_graph(6)));

  auto bw3 = is_circle_graph(obstructions()[2].graph, RecognitionMethod::Obstruction);
  CHECK_FALSE(bw3.is_circle);
  CHECK(bw3.obstruction == "BW3");

  // A relabeled, locally complemented W5 is still caught, with a replayable trace.
  std::mt19937_64 rng(3);
  Graph hidden = local_complement(relabel(wheel_graph(5), testgen::random_permutation(rng, 6)), 2);
  auto v = is_circle_graph(hidden, RecognitionMethod::Obstruction);
  CHECK_FALSE(v.is_circle);
  REQUIRE(v.trace);
  CHECK(isomorphic(v.trace->replay(hidden), wheel_graph(5)));
}

TEST_CASE("recognition properties on random inputs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    INFO("trial " << trial);
    // Geometry: intersection graphs of diagrams are circle graphs.
    auto d = testgen::random_generic_diagram(rng, 1 + trial % 8);
    Graph g = intersection_graph(d, IntersectionMode::CrossingOnly);
    auto v = is_circle_graph(g, RecognitionMethod::Brute);
    CHECK(v.is_circle);
    REQUIRE(v.witness);
    CHECK(realizes(*v.witness, g));
    auto closed = testgen::random_diagram(rng, 1 + trial % 7, 5);
    CHECK(is_circle_graph(intersection_graph(closed, IntersectionMode::Closed), RecognitionMethod::Brute).is_circle);

    // Local complementation keeps a circle graph circle.
    if (g.size() <= 7)
      for (Vertex x = 0; x < g.size(); ++x) CHECK(is_circle_graph(local_complement(g, x), RecognitionMethod::Brute).is_circle);

    // Trace replay reproduces the claimed minor exactly.
    Graph big = testgen::random_graph(rng, 4 + trial % 3);
    Graph small = testgen::random_graph(rng, 2 + trial % 3);
    if (auto m = has_vertex_minor(big, small)) {
      CHECK(m->trace.replay(big) == m->minor);
      Graph mapped = relabel(m->minor, m->to_h);
      CHECK(mapped.edges() == small.edges());
    }
  }
}

TEST_CASE("methods agree on random graphs with six vertices") {
  std::mt19937_64 rng(606);
  int negatives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testgen::random_graph(rng, 6, 0.6);
    CHECK_NOTHROW(negatives += !is_circle_graph(g, RecognitionMethod::Both).is_circle);
  }
  CHECK_NOTHROW(is_circle_graph(wheel_graph(5), RecognitionMethod::Both));
  MESSAGE("non-circle samples: " << negatives);
}
