#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circlegraph {

using Vertex = int;
using Permutation = std::vector<Vertex>;  // image of vertex i at position i

/// Finite simple undirected graph on at most 64 vertices, stored as one
/// 64-bit adjacency row per vertex. Vertices may carry names.
class Graph {
public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<std::string> names);

  int size() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[check(u)] >> check(v)) & 1U; }
  std::uint64_t row(Vertex v) const { return rows_[check(v)]; }
  int degree(Vertex v) const;
  int edge_count() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  /// Name of vertex v: the stored label, or the default `a`, `b`, ... (`v26`, ... past z).
  std::string name(Vertex v) const;
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the vertex with the given name, if any.
  std::optional<Vertex> find(const std::string& name) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  static std::string default_name(Vertex v);

private:
  Vertex check(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> names_;
};

/// Toggles every edge with both ends in N(v).
Graph local_complement(const Graph& g, Vertex v);

/// Induced subgraph on `vertices` (any order, duplicates rejected); vertices
/// are renumbered in increasing order and keep their names.
Graph induced(const Graph& g, std::span<const Vertex> vertices);

/// Graph with vertex v removed; names are kept.
Graph delete_vertex(const Graph& g, Vertex v);

/// Image graph under a relabeling: vertex i of g becomes perm[i].
Graph relabel(const Graph& g, const Permutation& perm);

/// First isomorphism g -> h in lexicographic backtracking order, if any.
std::optional<Permutation> isomorphic(const Graph& g, const Graph& h);

/// Brute-force automorphism enumeration, lexicographic order. n <= 10.
std::vector<Permutation> automorphisms(const Graph& g);
inline constexpr int kMaxAutomorphismVertices = 10;

/// Minimum over vertex orderings of the upper-triangle adjacency string, read
/// column by column: bits (0,1), (0,2), (1,2), (0,3), ... n <= 10.
struct CanonicalForm {
  int n = 0;
  std::vector<bool> bits;

  /// `<n>:<hex>`; bits packed most-significant first, zero-padded to a nibble.
  std::string hex() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};
inline constexpr int kMaxCanonicalVertices = 10;

CanonicalForm canonical_form(const Graph& g);
/// Same as canonical_form, but also returns an ordering realizing it:
/// order[k] is the vertex placed at position k.
CanonicalForm canonical_form(const Graph& g, std::vector<Vertex>* order);

/// Graph whose adjacency string (in the canonical column order) is `cf`.
Graph from_canonical(const CanonicalForm& cf);

// Small named families used by tests and the obstruction table.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Hub 0 joined to a rim cycle 1..rim.
Graph wheel_graph(int rim);

}  // namespace circlegraph
