#include "circlegraph/acceptance.hpp"

#include "circlegraph/chord_diagram.hpp"
#include "circlegraph/circle_aut.hpp"
#include "circlegraph/cli.hpp"
#include "circlegraph/graph.hpp"
#include "circlegraph/rado.hpp"
#include "circlegraph/recognition.hpp"
#include "circlegraph/text_io.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace circlegraph {

namespace {

// ---------------------------------------------------------------------------
// Oracles. These use plain adjacency matrices and rank comparisons so they
// share no code path with the predicates and graph operations they check.

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const Graph& g) {
  Matrix m(static_cast<std::size_t>(g.size()), std::vector<bool>(static_cast<std::size_t>(g.size()), false));
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v) m[u][v] = u != v && g.adjacent(u, v);
  return m;
}

Matrix oracle_local_complement(Matrix m, std::size_t v) {
  std::vector<std::size_t> nbrs;
  for (std::size_t u = 0; u < m.size(); ++u)
    if (m[v][u]) nbrs.push_back(u);
  for (std::size_t a : nbrs)
    for (std::size_t b : nbrs)
      if (a != b) m[a][b] = !m[a][b];
  return m;
}

// Chord graph from endpoint ranks: chords cross iff exactly one endpoint of
// one lies strictly between the endpoints of the other on the line [0, 1).
Matrix oracle_graph(const ChordDiagram& d, bool closed) {
  std::vector<Rational> values;
  for (const auto& c : d.chords()) {
    values.push_back(c.chord.lo().value());
    values.push_back(c.chord.hi().value());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto rank = [&](const CirclePoint& p) {
    return std::lower_bound(values.begin(), values.end(), p.value()) - values.begin();
  };
  const std::size_t n = static_cast<std::size_t>(d.size());
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto a1 = rank(d[static_cast<int>(i)].chord.lo()), a2 = rank(d[static_cast<int>(i)].chord.hi());
      auto b1 = rank(d[static_cast<int>(j)].chord.lo()), b2 = rank(d[static_cast<int>(j)].chord.hi());
      if (a1 > a2) std::swap(a1, a2);
      int shared = (b1 == a1 || b1 == a2) + (b2 == a1 || b2 == a2);
      if (shared > 0) {
        m[i][j] = closed && shared == 1;
        continue;
      }
      bool in1 = a1 < b1 && b1 < a2;
      bool in2 = a1 < b2 && b2 < a2;
      m[i][j] = in1 != in2;
    }
  return m;
}

bool oracle_generic(const ChordDiagram& d) {
  std::vector<Rational> values;
  for (const auto& c : d.chords()) {
    values.push_back(c.chord.lo().value());
    values.push_back(c.chord.hi().value());
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

// Interlacement graph read directly off a letter sequence.
Matrix oracle_interlacement(const std::vector<int>& word, int n) {
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < word.size(); ++i) pos[static_cast<std::size_t>(word[i])].push_back(static_cast<int>(i));
  Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int inside = 0;
      for (int p : pos[static_cast<std::size_t>(b)]) inside += pos[a][0] < p && p < pos[a][1];
      m[a][b] = inside == 1;
    }
  return m;
}

Graph from_matrix(const Matrix& m) {
  Graph g(static_cast<int>(m.size()));
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if (m[u][v]) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

// ---------------------------------------------------------------------------
// Random instances.

CirclePoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den_dist(1, 1L << 40);
  long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den - 1);
  return CirclePoint(Rational(num_dist(rng), den));
}

ChordDiagram random_generic_diagram(std::mt19937_64& rng, int max_chords) {
  std::uniform_int_distribution<int> count_dist(1, max_chords);
  const int n = count_dist(rng);
  std::set<CirclePoint> pts;
  while (static_cast<int>(pts.size()) < 2 * n) pts.insert(random_point(rng));
  std::vector<CirclePoint> order(pts.begin(), pts.end());
  std::shuffle(order.begin(), order.end(), rng);
  ChordDiagram d;
  for (int i = 0; i < n; ++i)
    d.add("c" + std::to_string(i), Chord(order[static_cast<std::size_t>(2 * i)], order[static_cast<std::size_t>(2 * i + 1)]));
  return d;
}

// Chords drawn from a small pool of points, each point used by at most 4 chords.
ChordDiagram random_shared_diagram(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pool_dist(2, 8);
  const int m = pool_dist(rng);
  std::set<CirclePoint> pool_set;
  while (static_cast<int>(pool_set.size()) < m) pool_set.insert(random_point(rng));
  std::vector<CirclePoint> pool(pool_set.begin(), pool_set.end());
  std::vector<int> used(pool.size(), 0);
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::uniform_int_distribution<int> target_dist(1, 10);
  const int target = target_dist(rng);
  ChordDiagram d;
  for (int attempt = 0; attempt < 200 && d.size() < target; ++attempt) {
    int a = pick(rng), b = pick(rng);
    if (a == b || used[static_cast<std::size_t>(a)] >= 4 || used[static_cast<std::size_t>(b)] >= 4) continue;
    Chord c(pool[static_cast<std::size_t>(a)], pool[static_cast<std::size_t>(b)]);
    bool dup = std::any_of(d.chords().begin(), d.chords().end(), [&](const NamedChord& nc) { return nc.chord == c; });
    if (dup) continue;
    d.add("c" + std::to_string(d.size()), c);
    ++used[static_cast<std::size_t>(a)];
    ++used[static_cast<std::size_t>(b)];
  }
  return d;
}

std::vector<int> random_word(std::mt19937_64& rng, int n) {
  std::vector<int> w;
  for (int i = 0; i < n; ++i) w.insert(w.end(), {i, i});
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s;
  for (int i = 0; i < n; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

// ---------------------------------------------------------------------------

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome flip_is_local_complementation() {
  std::mt19937_64 rng(1001);
  long flips = 0;
  Outcome o;
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    ChordDiagram d = random_generic_diagram(rng, 10);
    Matrix before = oracle_graph(d, false);
    for (int v = 0; v < d.size(); ++v) {
      ++flips;
      Matrix expected = oracle_local_complement(before, static_cast<std::size_t>(v));
      ChordDiagram flipped = flip_interval(d, d[v].name);
      if (oracle_graph(flipped, false) != expected ||
          to_matrix(intersection_graph(flipped, IntersectionMode::CrossingOnly)) != expected) {
        o.fail("mismatch on trial " + std::to_string(trial) + " at chord " + d[v].name);
        break;
      }
    }
  }
  if (o.pass) o.detail = "1000 diagrams, " + std::to_string(flips) + " flips";
  return o;
}

Outcome blow_up_correctness() {
  std::mt19937_64 rng(2002);
  Outcome o;
  int shared_cases = 0;
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    ChordDiagram d = random_shared_diagram(rng);
    if (!oracle_generic(d)) ++shared_cases;
    ChordDiagram b = blow_up(d);
    if (!oracle_generic(b)) o.fail("output not generic on trial " + std::to_string(trial));
    else if (b.names() != d.names()) o.fail("names changed on trial " + std::to_string(trial));
    else if (oracle_graph(b, false) != oracle_graph(d, true)) o.fail("graph changed on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "500 diagrams, " + std::to_string(shared_cases) + " with shared endpoints";
  return o;
}

// Endpoint labels (chord, end) in increasing position order.
std::vector<std::pair<int, int>> endpoint_sequence(const ChordDiagram& d) {
  std::vector<std::tuple<Rational, int, int>> ends;
  for (int i = 0; i < d.size(); ++i) {
    ends.emplace_back(d[i].chord.lo().value(), i, 0);
    ends.emplace_back(d[i].chord.hi().value(), i, 1);
  }
  std::sort(ends.begin(), ends.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, i, e] : ends) out.emplace_back(i, e);
  return out;
}

bool is_rotation(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t s = 0; s < b.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + s) % b.size()];
    if (ok) return true;
  }
  return false;
}

Outcome universal_embedding() {
  std::mt19937_64 rng(3003);
  Outcome o;
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    ChordDiagram d = random_generic_diagram(rng, 10);
    ChordDiagram r = reembed_incremental(d);
    // Chord endpoints are stored sorted, so the lo/hi tag of an endpoint may
    // change under rotation; the cyclic sequence of chord indices may not.
    std::vector<int> seq_d, seq_r;
    for (auto [i, e] : endpoint_sequence(d)) seq_d.push_back(i);
    for (auto [i, e] : endpoint_sequence(r)) seq_r.push_back(i);
    if (r.names() != d.names() || !is_rotation(seq_d, seq_r))
      o.fail("cyclic order changed on trial " + std::to_string(trial));
    else if (oracle_graph(r, false) != oracle_graph(d, false) || oracle_graph(r, true) != oracle_graph(d, true))
      o.fail("graphs changed on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 10);
    auto letters_int = random_word(rng, n_dist(rng));
    std::vector<std::string> letters;
    for (int l : letters_int) letters.push_back(Graph::default_name(l));
    DOWord w(letters);
    if (!(to_word(embed_word(w)) == w)) o.fail("word round trip failed on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "500 diagrams re-embedded, 500 words round-tripped";
  return o;
}

// All graphs on 1..max_n vertices up to isomorphism.
std::vector<Graph> all_graphs_up_to_iso(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<CanonicalForm> seen;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
          if ((mask >> bit) & 1U) g.add_edge(i, j);
      auto cf = canonical_form(g);
      if (seen.insert(cf).second) out.push_back(from_canonical(cf));
    }
  }
  return out;
}

Outcome recognition_cross_oracle() {
  Outcome o;
  auto graphs = all_graphs_up_to_iso(6);
  if (graphs.size() != 208) o.fail("enumerated " + std::to_string(graphs.size()) + " classes, expected 208");
  int circle = 0;
  for (const auto& g : graphs) {
    if (!o.pass) break;
    try {
      auto v = is_circle_graph(g, RecognitionMethod::Both);
      circle += v.is_circle;
      if (g.size() <= 5 && !v.is_circle) o.fail("graph on " + std::to_string(g.size()) + " vertices rejected");
    } catch (const OracleDisagreement& e) {
      o.fail(e.what());
    }
  }
  for (const auto& ob : obstructions()) {
    if (!o.pass) break;
    if (is_circle_graph(ob.graph, RecognitionMethod::Brute).is_circle) o.fail(ob.name + " realized by word search");
    auto v = is_circle_graph(ob.graph, RecognitionMethod::Obstruction);
    if (v.is_circle) o.fail(ob.name + " accepted by obstruction test");
  }
  if (o.pass)
    o.detail = std::to_string(graphs.size()) + " classes, " + std::to_string(circle) + " circle, " +
               std::to_string(graphs.size() - static_cast<std::size_t>(circle)) + " not; W5 W7 BW3 rejected";
  return o;
}

Outcome class_closure() {
  std::mt19937_64 rng(5005);
  Outcome o;
  int checks = 0;
  for (int trial = 0; trial < 200 && o.pass; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 7);
    const int n = n_dist(rng);
    Graph g = from_matrix(oracle_interlacement(random_word(rng, n), n));
    for (Vertex v = 0; v < n && o.pass; ++v) {
      ++checks;
      try {
        if (!is_circle_graph(from_matrix(oracle_local_complement(to_matrix(g), static_cast<std::size_t>(v))),
                             RecognitionMethod::Both).is_circle)
          o.fail("local complement rejected on trial " + std::to_string(trial));
      } catch (const OracleDisagreement& e) {
        o.fail(e.what());
      }
    }
  }
  if (o.pass) o.detail = "200 graphs, " + std::to_string(checks) + " complementations";
  return o;
}

Outcome involutions() {
  std::mt19937_64 rng(6006);
  Outcome o;
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 12);
    Graph g = random_graph(rng, n_dist(rng));
    for (Vertex v = 0; v < g.size(); ++v)
      if (!(local_complement(local_complement(g, v), v) == g)) {
        o.fail("graph involution failed on trial " + std::to_string(trial));
        break;
      }
  }
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    ChordDiagram d = random_generic_diagram(rng, 10);
    for (const auto& name : d.names())
      if (!(flip_interval(flip_interval(d, name), name) == d)) {
        o.fail("flip involution failed on trial " + std::to_string(trial));
        break;
      }
  }
  if (o.pass) o.detail = "1000 graphs, 1000 diagrams";
  return o;
}

// N(x) ∩ S as computed from a matrix.
VertexSet oracle_trace(const Matrix& m, int x, const VertexSet& s) {
  VertexSet out;
  for (int y : s)
    if (y != x && m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) out.insert(y);
  return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Outcome rado_witness_algebra() {
  std::mt19937_64 rng(7007);
  Outcome o;
  long qualifying = 0;
  long printed_failures = 0;
  for (int trial = 0; trial < 2000 && o.pass; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 10);
    const int n = n_dist(rng);
    Graph g = random_graph(rng, n);
    std::uniform_int_distribution<int> v_dist(0, n - 1);
    const int v = v_dist(rng);
    VertexSet u = random_subset(rng, n, 0.3);
    VertexSet w;
    for (int x : random_subset(rng, n, 0.3))
      if (!u.contains(x)) w.insert(x);
    if (trial % 2 == 0) u.insert(v), w.erase(v);  // exercise both cases evenly

    const Matrix gm = to_matrix(g);
    const Matrix gv = oracle_local_complement(gm, static_cast<std::size_t>(v));
    const VertexSet uw = unite(u, w);

    auto [up, wp] = locomp_witness_sets(g, v, u, w);
    const VertexSet upwp = unite(up, wp);
    for (int x = 0; x < n; ++x) {
      if (upwp.contains(x) || oracle_trace(gm, x, upwp) != up) continue;
      ++qualifying;
      if (uw.contains(x) || oracle_trace(gv, x, uw) != u) {
        o.fail("guarantee broken on trial " + std::to_string(trial));
        break;
      }
    }

    auto [pu, pw] = locomp_witness_sets_as_printed(g, v, u, w);
    const VertexSet pupw = unite(pu, pw);
    for (int x = 0; x < n; ++x) {
      if (pupw.contains(x) || oracle_trace(gm, x, pupw) != pu) continue;
      if (uw.contains(x) || oracle_trace(gv, x, uw) != u) ++printed_failures;
    }
  }
  if (o.pass && qualifying == 0) o.fail("no instance met the precondition");
  if (o.pass && printed_failures == 0) o.fail("printed W' formula never failed");
  if (o.pass)
    o.detail = std::to_string(qualifying) + " witnesses checked; printed W' formula fails on " +
               std::to_string(printed_failures) + " witnesses";
  return o;
}

Outcome bit_extension() {
  Outcome o;
  for (int m = 1; m <= 4 && o.pass; ++m) {
    VertexSet ground;
    for (int i = 0; i < m; ++i) ground.insert(i);
    if (!check_extension(bit_graph(1 << (m + 1)), ground).pass) o.fail("extension fails for m = " + std::to_string(m));
  }
  // BIT adjacency computed directly; scan witnesses above max(U ∪ W) up to 2^10.
  auto bit_adjacent = [](std::uint64_t a, std::uint64_t b) {
    if (a > b) std::swap(a, b);
    return a != b && ((b >> a) & 1U);
  };
  std::mt19937_64 rng(8008);
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    VertexSet u = random_subset(rng, 9, 0.35);
    VertexSet w;
    for (int x : random_subset(rng, 9, 0.35))
      if (!u.contains(x)) w.insert(x);
    const VertexSet uw = unite(u, w);
    const std::uint64_t start = uw.empty() ? 0 : static_cast<std::uint64_t>(*uw.rbegin()) + 1;
    std::optional<std::uint64_t> least;
    for (std::uint64_t x = start; x < 1024 && !least; ++x) {
      bool ok = true;
      for (int y : uw) ok = ok && bit_adjacent(x, static_cast<std::uint64_t>(y)) == u.contains(y);
      if (ok) least = x;
    }
    if (!least || bit_witness(u, w) != *least) o.fail("bit_witness disagrees on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "m = 1..4 pass; 500 witnesses match the scan";
  return o;
}

Outcome automorphism_lifting() {
  Outcome o;
  ChordDiagram d = parse_diagram("chord a 0 1/10\nchord b 0 1/5\nchord c 2/5 3/5\nchord e 1/2 7/10\n");
  auto all = automorphisms(intersection_graph(d, IntersectionMode::Closed));
  auto preserving = class_preserving_automorphisms(d);
  if (all.size() != 8) o.fail(std::to_string(all.size()) + " graph automorphisms, expected 8");
  if (preserving.size() != 4) o.fail(std::to_string(preserving.size()) + " class-preserving, expected 4");
  int lifted = 0;
  for (const auto& h : all) {
    if (!o.pass) break;
    const bool keeps = std::find(preserving.begin(), preserving.end(), h) != preserving.end();
    auto r = lift_automorphism(d, h);
    if (r.lift.has_value() != keeps) {
      o.fail("lift existence does not match class preservation");
      break;
    }
    if (r) {
      ++lifted;
      for (int c = 0; c < d.size(); ++c) {
        Chord image(r.lift->at(d[c].chord.lo()), r.lift->at(d[c].chord.hi()));
        if (!(image == d[h[static_cast<std::size_t>(c)]].chord)) o.fail("lifted map disagrees on chord " + d[c].name);
      }
    } else if (r.failure->reason != LiftFailure::Reason::IncidenceViolation || r.failure->from != EdgeKind::Incident ||
               r.failure->to != EdgeKind::Crossing) {
      o.fail("failure witness is not an Incident -> Crossing violation");
    }
  }
  if (o.pass) o.detail = "8 automorphisms, 4 class-preserving, " + std::to_string(lifted) + " lifted";
  return o;
}

std::size_t count_lines(const boost::property_tree::ptree& node) {
  std::size_t n = 0;
  for (const auto& [key, child] : node) n += (key == "line") + count_lines(child);
  return n;
}

Outcome cli_determinism() {
  Outcome o;
  int svgs = 0;
  for (const auto& c : golden_cases()) {
    std::string outputs[2];
    int codes[2];
    for (int run = 0; run < 2; ++run) {
      std::istringstream in(c.stdin_text);
      std::ostringstream out, err;
      codes[run] = run_cli(c.args, in, out, err);
      outputs[run] = out.str();
    }
    if (outputs[0] != outputs[1] || codes[0] != codes[1]) o.fail(c.id + ": output differs between runs");
    else if (codes[0] != c.exit_code) o.fail(c.id + ": exit code " + std::to_string(codes[0]));
    else if (const std::string* golden = golden_output(c.id); !golden) o.fail(c.id + ": no golden output");
    else if (*golden != outputs[0]) o.fail(c.id + ": output differs from golden file");
    if (!o.pass) break;
    if (c.args.front() == "render") {
      ++svgs;
      try {
        std::istringstream svg(outputs[0]);
        boost::property_tree::ptree tree;
        boost::property_tree::read_xml(svg, tree);
        const auto chords = parse_diagram(c.stdin_text).size();
        if (count_lines(tree) != static_cast<std::size_t>(chords)) o.fail(c.id + ": segment count mismatch");
      } catch (const boost::property_tree::xml_parser_error& e) {
        o.fail(c.id + ": SVG does not parse: " + e.what());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(golden_cases().size()) + " invocations, " + std::to_string(svgs) + " SVG checked";
  return o;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& log) {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "flip realizes local complementation", 10.0, flip_is_local_complementation},
      {2, "blow-up preserves the Closed graph", 5.0, blow_up_correctness},
      {3, "universal rational embedding", 5.0, universal_embedding},
      {4, "recognition cross-oracle, n <= 6", 300.0, recognition_cross_oracle},
      {5, "circle graphs closed under local complementation", 120.0, class_closure},
      {6, "involutions", 2.0, involutions},
      {7, "extension witness algebra", 10.0, rado_witness_algebra},
      {8, "BIT graph extension property", 5.0, bit_extension},
      {9, "automorphism lifting", 1.0, automorphism_lifting},
      {10, "CLI determinism", 5.0, cli_determinism},
  };
  std::vector<CriterionResult> results;
  for (const auto& s : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = s.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CriterionResult r{s.id, s.title, o.pass && secs < s.budget, o.detail, secs, s.budget};
    if (o.pass && secs >= s.budget) r.detail += " (over time budget)";
    std::ostringstream line;
    line << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << " " << r.title << ": " << r.detail << " ("
         << std::fixed << std::setprecision(2) << secs << "s / " << std::setprecision(0) << s.budget << "s)\n";
    log << line.str() << std::flush;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace circlegraph
