#include "circlegraph/rado.hpp"

#include "circlegraph/text_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace circlegraph {

namespace {

void require_disjoint(const VertexSet& u, const VertexSet& w) {
  for (int x : u)
    if (w.contains(x)) throw std::invalid_argument("U and W share vertex " + std::to_string(x));
}

VertexSet neighbours(const Graph& g, Vertex v) {
  VertexSet out;
  for (Vertex u = 0; u < g.size(); ++u)
    if (g.adjacent(u, v)) out.insert(u);
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

Graph bit_graph(int n) {
  if (n < 0 || n > Graph::kMaxVertices) throw std::invalid_argument("bit_graph: n must lie in [0, 64]");
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((static_cast<std::uint64_t>(j) >> i) & 1U) g.add_edge(i, j);
  return g;
}

std::uint64_t bit_witness(const VertexSet& u_set, const VertexSet& w_set) {
  require_disjoint(u_set, w_set);
  std::uint64_t must = 0;
  std::uint64_t forbid = 0;
  int top = -1;
  for (int i : u_set) {
    if (i < 0 || i >= 62) throw std::invalid_argument("bit_witness: members must lie in [0, 62)");
    must |= std::uint64_t{1} << i;
    top = std::max(top, i);
  }
  for (int i : w_set) {
    if (i < 0 || i >= 62) throw std::invalid_argument("bit_witness: members must lie in [0, 62)");
    forbid |= std::uint64_t{1} << i;
    top = std::max(top, i);
  }
  // Bits above `top` are unconstrained; bits at or below it are forced on (U),
  // forced off (W) or free. Fill free low bits in increasing binary order and
  // take the first value past `top`; if none exists, set the least high bit.
  const std::uint64_t low_mask = top < 0 ? 0 : (std::uint64_t{1} << (top + 1)) - 1;
  const std::uint64_t free_low = low_mask & ~must & ~forbid;
  const auto floor_value = static_cast<std::uint64_t>(top + 1);
  std::optional<std::uint64_t> best;
  // Enumerate subsets of the free low bits in increasing numeric order.
  for (std::uint64_t sub = 0;; sub = (sub - free_low) & free_low) {
    std::uint64_t x = must | sub;
    if (x >= floor_value) {
      best = x;
      break;
    }
    if (sub == free_low) break;
  }
  if (best) return *best;
  return must | (low_mask + 1);
}

bool is_extension_witness(const Graph& g, Vertex x, const VertexSet& u_set, const VertexSet& w_set) {
  if (u_set.contains(x) || w_set.contains(x)) return false;
  for (int u : u_set)
    if (!g.adjacent(x, u)) return false;
  for (int w : w_set)
    if (g.adjacent(x, w)) return false;
  return true;
}

std::optional<Vertex> extension_witness(const Graph& g, const VertexSet& u_set, const VertexSet& w_set) {
  require_disjoint(u_set, w_set);
  for (int v : set_union(u_set, w_set))
    if (v < 0 || v >= g.size()) throw std::out_of_range("extension_witness: vertex " + std::to_string(v) + " not in graph");
  for (Vertex x = 0; x < g.size(); ++x)
    if (is_extension_witness(g, x, u_set, w_set)) return x;
  return std::nullopt;
}

std::pair<VertexSet, VertexSet> locomp_witness_sets(const Graph& g, Vertex v, const VertexSet& u_set,
                                                    const VertexSet& w_set) {
  require_disjoint(u_set, w_set);
  if (v < 0 || v >= g.size()) throw std::out_of_range("locomp_witness_sets: vertex out of range");
  if (!u_set.contains(v)) {
    VertexSet w_prime = w_set;
    w_prime.insert(v);
    return {u_set, w_prime};
  }
  const VertexSet nv = neighbours(g, v);
  return {set_union(set_difference(u_set, nv), set_intersection(w_set, nv)),
          set_union(set_intersection(u_set, nv), set_difference(w_set, nv))};
}

std::pair<VertexSet, VertexSet> locomp_witness_sets_as_printed(const Graph& g, Vertex v, const VertexSet& u_set,
                                                               const VertexSet& w_set) {
  require_disjoint(u_set, w_set);
  if (v < 0 || v >= g.size()) throw std::out_of_range("locomp_witness_sets: vertex out of range");
  if (!u_set.contains(v)) {
    VertexSet w_prime = w_set;
    w_prime.insert(v);
    return {u_set, w_prime};
  }
  const VertexSet nv = neighbours(g, v);
  return {set_union(set_difference(u_set, nv), set_intersection(w_set, nv)),
          set_union(set_intersection(u_set, nv), set_difference(u_set, nv))};
}

std::string ExtensionReport::str() const {
  std::string out;
  for (const auto& e : entries) {
    out += "U={" + format_vertex_set(e.u_set) + "} W={" + format_vertex_set(e.w_set) + "} -> ";
    out += e.witness ? std::to_string(*e.witness) : "none";
    out += "\n";
  }
  out += pass ? "PASS\n" : "FAIL\n";
  return out;
}

ExtensionReport check_extension(const Graph& g, const VertexSet& ground) {
  for (int v : ground)
    if (v < 0 || v >= g.size()) throw std::out_of_range("check_extension: ground vertex " + std::to_string(v) + " not in graph");
  const std::vector<int> members(ground.begin(), ground.end());
  std::vector<int> digit(members.size(), 0);
  ExtensionReport report;
  while (true) {
    VertexSet u, w;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (digit[i] == 1) u.insert(members[i]);
      if (digit[i] == 2) w.insert(members[i]);
    }
    auto x = extension_witness(g, u, w);
    report.pass = report.pass && x.has_value();
    report.entries.push_back({std::move(u), std::move(w), x});
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
  }
  return report;
}

}  // namespace circlegraph
