#include "circlegraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace circlegraph {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph size " + std::to_string(n) + " outside [0, 64]");
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::vector<std::string> names) : Graph(n) {
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw std::invalid_argument("name count does not match vertex count");
  names_ = std::move(names);
}

Vertex Graph::check(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of size " + std::to_string(n_));
  return v;
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[check(v)]); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (check(u) == check(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  if (check(u) == check(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u] ^= std::uint64_t{1} << v;
  rows_[v] ^= std::uint64_t{1} << u;
}

std::string Graph::default_name(Vertex v) {
  if (v < 26) return std::string(1, static_cast<char>('a' + v));
  return "v" + std::to_string(v);
}

std::string Graph::name(Vertex v) const {
  check(v);
  return names_.empty() ? default_name(v) : names_[v];
}

std::optional<Vertex> Graph::find(const std::string& name) const {
  for (Vertex v = 0; v < n_; ++v)
    if (this->name(v) == name) return v;
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph local_complement(const Graph& g, Vertex v) {
  Graph out = g;
  std::uint64_t nbrs = g.row(v);
  for (std::uint64_t rest = nbrs; rest; rest &= rest - 1) {
    Vertex u = std::countr_zero(rest);
    std::uint64_t others = nbrs & ~(std::uint64_t{1} << u) & ~((std::uint64_t{1} << u) - 1);
    for (; others; others &= others - 1) out.toggle_edge(u, std::countr_zero(others));
  }
  return out;
}

Graph induced(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("induced: repeated vertex");
  std::vector<std::string> names;
  if (g.has_names())
    for (auto v : keep) names.push_back(g.name(v));
  Graph out(static_cast<int>(keep.size()), std::move(names));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.size(); ++u)
    if (u != v) keep.push_back(u);
  if (static_cast<int>(keep.size()) == g.size()) throw std::out_of_range("delete_vertex: no such vertex");
  return induced(g, keep);
}

Graph relabel(const Graph& g, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != g.size()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<std::string> names;
  if (g.has_names()) {
    names.resize(perm.size());
    for (Vertex v = 0; v < g.size(); ++v) names[perm[v]] = g.name(v);
  }
  Graph out(g.size(), std::move(names));
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

// Lexicographic backtracking over maps g -> h. `visit` returns false to stop.
template <typename Visit>
void search_isomorphisms(const Graph& g, const Graph& h, Visit&& visit) {
  const int n = g.size();
  if (n != h.size() || g.edge_count() != h.edge_count()) return;
  Permutation map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool stop = false;
  auto recurse = [&](auto&& self, Vertex u) -> void {
    if (u == n) {
      if (!visit(map)) stop = true;
      return;
    }
    for (Vertex x = 0; x < n && !stop; ++x) {
      if (used[x] || g.degree(u) != h.degree(x)) continue;
      bool ok = true;
      for (Vertex w = 0; w < u && ok; ++w) ok = g.adjacent(u, w) == h.adjacent(x, map[w]);
      if (!ok) continue;
      map[u] = x;
      used[x] = true;
      self(self, u + 1);
      used[x] = false;
      map[u] = -1;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::optional<Permutation> isomorphic(const Graph& g, const Graph& h) {
  std::optional<Permutation> found;
  search_isomorphisms(g, h, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Permutation> automorphisms(const Graph& g) {
  if (g.size() > kMaxAutomorphismVertices)
    throw std::invalid_argument("automorphisms: graph has more than 10 vertices");
  std::vector<Permutation> out;
  search_isomorphisms(g, g, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) nibble = (nibble << 1) | (i + j < bits.size() && bits[i + j] ? 1 : 0);
    out.push_back(kDigits[nibble]);
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(g, nullptr); }

CanonicalForm canonical_form(const Graph& g, std::vector<Vertex>* order_out) {
  const int n = g.size();
  if (n > kMaxCanonicalVertices) throw std::invalid_argument("canonical_form: graph has more than 10 vertices");
  const std::size_t len = static_cast<std::size_t>(n * (n - 1) / 2);
  CanonicalForm best{n, {}};
  std::vector<Vertex> best_order;
  std::vector<bool> current(len, false);
  std::vector<Vertex> order(static_cast<std::size_t>(n), -1);
  // cmp[k]: comparison of the current prefix through position k against best (-1 less, 0 equal).
  std::vector<int> cmp(static_cast<std::size_t>(n) + 1, 0);
  bool have_best = false;
  std::uint64_t used = 0;

  auto recurse = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (!have_best || cmp[k] < 0) {
        best.bits = current;
        best_order = order;
        have_best = true;
        std::fill(cmp.begin(), cmp.end(), 0);
      }
      return;
    }
    const std::size_t base = static_cast<std::size_t>(k * (k - 1) / 2);
    for (Vertex v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      for (int i = 0; i < k; ++i) current[base + i] = g.adjacent(order[i], v);
      int state = cmp[k];
      if (have_best && state == 0) {
        for (int i = 0; i < k; ++i) {
          if (current[base + i] != best.bits[base + i]) {
            state = current[base + i] ? 1 : -1;
            break;
          }
        }
        if (state > 0) continue;
      }
      order[k] = v;
      used |= std::uint64_t{1} << v;
      cmp[k + 1] = have_best ? state : 0;
      self(self, k + 1);
      used &= ~(std::uint64_t{1} << v);
    }
  };
  recurse(recurse, 0);
  if (n == 0) best.bits.clear();
  if (order_out) *order_out = best_order;
  return best;
}

Graph from_canonical(const CanonicalForm& cf) {
  Graph g(cf.n);
  std::size_t idx = 0;
  for (Vertex j = 1; j < cf.n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (cf.bits.at(idx++)) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (Vertex v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == rim ? 1 : v + 1);
  }
  return g;
}

}  // namespace circlegraph
