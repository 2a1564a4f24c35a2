#include "circlegraph/recognition.hpp"

#include "circlegraph/text_io.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace circlegraph {

namespace {

void require_search_bound(const Graph& g, const char* what) {
  if (g.size() > kMaxSearchVertices)
    throw std::invalid_argument(std::string(what) + ": graph has more than 8 vertices");
}

// Depth-first construction of a double occurrence word, left to right, with
// vertex 0 fixed at position 0. Letters between the two occurrences of u are
// tracked as prefix XOR masks, so a letter seen once in between is exactly a
// neighbour of u in the interlacement graph.
class WordSearch {
public:
  explicit WordSearch(const Graph& g)
      : g_(g), n_(g.size()), first_(static_cast<std::size_t>(n_), -1), word_(2 * static_cast<std::size_t>(n_)),
        prefix_(2 * static_cast<std::size_t>(n_) + 1, 0) {}

  std::optional<std::vector<Vertex>> run() {
    if (n_ == 0) return std::vector<Vertex>{};
    if (extend(0)) return word_;
    return std::nullopt;
  }

private:
  std::uint64_t between(Vertex u, int pos) const {
    return prefix_[static_cast<std::size_t>(pos)] ^ prefix_[static_cast<std::size_t>(first_[u]) + 1];
  }

  void put(int pos, Vertex v) {
    word_[static_cast<std::size_t>(pos)] = v;
    prefix_[static_cast<std::size_t>(pos) + 1] = prefix_[static_cast<std::size_t>(pos)] ^ (std::uint64_t{1} << v);
  }

  bool extend(int pos) {
    if (pos == 2 * n_) return true;
    // Close an open vertex.
    for (std::uint64_t rest = open_; rest; rest &= rest - 1) {
      Vertex u = std::countr_zero(rest);
      if (between(u, pos) != g_.row(u)) continue;
      put(pos, u);
      open_ &= ~(std::uint64_t{1} << u);
      // The closed letter now sits once or twice between every other open
      // vertex's first occurrence and the end; that relation is final.
      bool consistent = true;
      for (std::uint64_t o = open_; o && consistent; o &= o - 1) {
        Vertex w = std::countr_zero(o);
        consistent = static_cast<bool>((between(w, pos + 1) >> u) & 1U) == g_.adjacent(w, u);
      }
      if (consistent && extend(pos + 1)) return true;
      open_ |= std::uint64_t{1} << u;
    }
    // Open a fresh vertex.
    const int remaining_slots = 2 * n_ - pos;
    const int unopened = n_ - opened_count_;
    if (unopened == 0 || 2 * unopened + std::popcount(open_) > remaining_slots) return false;
    for (Vertex v = 0; v < n_; ++v) {
      if (first_[v] >= 0) continue;
      if (pos == 0 && v != 0) break;
      put(pos, v);
      first_[v] = pos;
      open_ |= std::uint64_t{1} << v;
      ++opened_count_;
      if (extend(pos + 1)) return true;
      --opened_count_;
      open_ &= ~(std::uint64_t{1} << v);
      first_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> first_;
  std::vector<Vertex> word_;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t open_ = 0;
  int opened_count_ = 0;
};

struct ClosureNode {
  Graph graph;
  std::vector<Vertex> origin;  // source index of each vertex of `graph`
  int parent = -1;
  MinorStep step{};
};

// Level-by-level exploration: the local-complementation orbit at each vertex
// count is exhausted before single-vertex deletions open the next level.
class ClosureSearch {
public:
  ClosureSearch(const Graph& g, int min_vertices, const CanonicalForm* target)
      : min_vertices_(min_vertices), target_(target) {
    std::vector<Vertex> origin(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < g.size(); ++v) origin[static_cast<std::size_t>(v)] = v;
    std::vector<int> level;
    if (add(ClosureNode{g, std::move(origin), -1, {}}, level)) return;
    while (!level.empty()) {
      for (std::size_t i = 0; i < level.size(); ++i) {
        const int id = level[i];
        for (Vertex v = 0; v < nodes_[static_cast<std::size_t>(id)].graph.size(); ++v) {
          const auto& node = nodes_[static_cast<std::size_t>(id)];
          ClosureNode next{local_complement(node.graph, v), node.origin, id,
                           {MinorStep::Kind::LocalComplement, node.origin[static_cast<std::size_t>(v)]}};
          if (add(std::move(next), level)) return;
        }
      }
      std::vector<int> below;
      const int k = nodes_[static_cast<std::size_t>(level.front())].graph.size();
      if (k - 1 >= min_vertices_ && k > 0) {
        for (int id : level) {
          for (Vertex v = 0; v < k; ++v) {
            const auto& node = nodes_[static_cast<std::size_t>(id)];
            auto origin = node.origin;
            origin.erase(origin.begin() + v);
            ClosureNode next{delete_vertex(node.graph, v), std::move(origin), id,
                             {MinorStep::Kind::DeleteVertex, node.origin[static_cast<std::size_t>(v)]}};
            if (add(std::move(next), below)) return;
          }
        }
      }
      level = std::move(below);
    }
  }

  std::optional<int> find(const CanonicalForm& cf) const {
    auto it = index_.find(cf);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::set<CanonicalForm> forms() const {
    std::set<CanonicalForm> out;
    for (const auto& [cf, id] : index_) out.insert(cf);
    return out;
  }

  VertexMinorTrace trace_to(int id) const {
    VertexMinorTrace t;
    for (int at = id; nodes_[static_cast<std::size_t>(at)].parent >= 0; at = nodes_[static_cast<std::size_t>(at)].parent)
      t.steps.push_back(nodes_[static_cast<std::size_t>(at)].step);
    std::reverse(t.steps.begin(), t.steps.end());
    return t;
  }

  const Graph& graph(int id) const { return nodes_[static_cast<std::size_t>(id)].graph; }

private:
  // Returns true when the target has been reached.
  bool add(ClosureNode node, std::vector<int>& level) {
    CanonicalForm cf = canonical_form(node.graph);
    if (index_.contains(cf)) return false;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    level.push_back(id);
    const bool hit = target_ && cf == *target_;
    index_.emplace(std::move(cf), id);
    return hit;
  }

  int min_vertices_;
  const CanonicalForm* target_;
  std::vector<ClosureNode> nodes_;
  std::map<CanonicalForm, int> index_;
};

}  // namespace

std::optional<DOWord> realize_brute_force(const Graph& g) {
  require_search_bound(g, "realize_brute_force");
  auto word = WordSearch(g).run();
  if (!word) return std::nullopt;
  std::vector<std::string> letters;
  letters.reserve(word->size());
  for (Vertex v : *word) letters.push_back(g.name(v));
  return DOWord(std::move(letters)).canonical();
}

Graph VertexMinorTrace::replay(const Graph& source) const {
  Graph g = source;
  std::vector<Vertex> origin(static_cast<std::size_t>(source.size()));
  for (Vertex v = 0; v < source.size(); ++v) origin[static_cast<std::size_t>(v)] = v;
  for (const auto& step : steps) {
    auto it = std::find(origin.begin(), origin.end(), step.vertex);
    if (it == origin.end()) throw std::invalid_argument("trace refers to a deleted or unknown vertex");
    const auto at = static_cast<Vertex>(it - origin.begin());
    if (step.kind == MinorStep::Kind::LocalComplement) {
      g = local_complement(g, at);
    } else {
      g = delete_vertex(g, at);
      origin.erase(it);
    }
  }
  return g;
}

std::string VertexMinorTrace::str(const Graph& source) const {
  if (steps.empty()) return "identity";
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ' ';
    out += s.kind == MinorStep::Kind::LocalComplement ? "lc(" : "del(";
    out += source.name(s.vertex) + ")";
  }
  return out;
}

std::set<CanonicalForm> vertex_minor_closure(const Graph& g, int min_vertices) {
  require_search_bound(g, "vertex_minor_closure");
  return ClosureSearch(g, min_vertices, nullptr).forms();
}

std::optional<VertexMinorMatch> has_vertex_minor(const Graph& g, const Graph& h) {
  require_search_bound(g, "has_vertex_minor");
  if (h.size() > g.size()) return std::nullopt;
  const CanonicalForm target = canonical_form(h);
  ClosureSearch search(g, h.size(), &target);
  auto id = search.find(target);
  if (!id) return std::nullopt;
  VertexMinorMatch match{search.trace_to(*id), search.graph(*id), {}};
  match.to_h = *isomorphic(match.minor, h);
  return match;
}

const std::string& obstruction_text() {
  static const std::string text =
      "# W5: hub 0 and a 5-cycle rim\n"
      "graph 6\n"
      "edge 0 1\nedge 0 2\nedge 0 3\nedge 0 4\nedge 0 5\n"
      "edge 1 2\nedge 1 5\nedge 2 3\nedge 3 4\nedge 4 5\n"
      "# W7: hub 0 and a 7-cycle rim\n"
      "graph 8\n"
      "edge 0 1\nedge 0 2\nedge 0 3\nedge 0 4\nedge 0 5\nedge 0 6\nedge 0 7\n"
      "edge 1 2\nedge 1 7\nedge 2 3\nedge 3 4\nedge 4 5\nedge 5 6\nedge 6 7\n"
      "# BW3: hub 0, rim 1 2 3, rim edges subdivided by 4 5 6\n"
      "graph 7\n"
      "edge 0 1\nedge 0 2\nedge 0 3\n"
      "edge 1 4\nedge 1 6\nedge 2 4\nedge 2 5\nedge 3 5\nedge 3 6\n";
  return text;
}

const std::vector<Obstruction>& obstructions() {
  static const std::vector<Obstruction> table = [] {
    auto graphs = parse_graphs(obstruction_text());
    return std::vector<Obstruction>{{"W5", graphs.at(0)}, {"W7", graphs.at(1)}, {"BW3", graphs.at(2)}};
  }();
  return table;
}

CircleVerdict is_circle_graph(const Graph& g, RecognitionMethod method) {
  require_search_bound(g, "is_circle_graph");
  CircleVerdict verdict;

  bool brute_says = false;
  if (method != RecognitionMethod::Obstruction) {
    verdict.witness = realize_brute_force(g);
    brute_says = verdict.witness.has_value();
  }

  bool obstruction_says = true;
  if (method != RecognitionMethod::Brute) {
    int smallest = g.size() + 1;
    for (const auto& o : obstructions()) smallest = std::min(smallest, o.graph.size());
    if (g.size() >= smallest) {
      ClosureSearch search(g, smallest, nullptr);
      for (const auto& o : obstructions()) {
        if (o.graph.size() > g.size()) continue;
        if (auto id = search.find(canonical_form(o.graph))) {
          verdict.obstruction = o.name;
          verdict.trace = search.trace_to(*id);
          obstruction_says = false;
          break;
        }
      }
    }
  }

  switch (method) {
    case RecognitionMethod::Brute: verdict.is_circle = brute_says; break;
    case RecognitionMethod::Obstruction: verdict.is_circle = obstruction_says; break;
    case RecognitionMethod::Both:
      if (brute_says != obstruction_says)
        throw OracleDisagreement("recognizers disagree: word search says " +
                                 std::string(brute_says ? "circle" : "not circle") + ", obstruction test says " +
                                 std::string(obstruction_says ? "circle" : "not circle"));
      verdict.is_circle = brute_says;
      break;
  }
  return verdict;
}

}  // namespace circlegraph
