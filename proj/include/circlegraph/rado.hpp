#pragma once

#include "circlegraph/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace circlegraph {

using VertexSet = std::set<int>;

/// Vertices 0..n-1; for i < j, i ~ j iff bit i of j is set. n <= 64.
Graph bit_graph(int n);

/// Least x > max(U ∪ W) (x >= 0 when both are empty) whose binary expansion
/// has every bit of U set and every bit of W clear. Throws on overlapping
/// sets, negative members, or members >= 62.
std::uint64_t bit_witness(const VertexSet& u_set, const VertexSet& w_set);

/// True iff x is outside U ∪ W and N(x) ∩ (U ∪ W) = U.
bool is_extension_witness(const Graph& g, Vertex x, const VertexSet& u_set, const VertexSet& w_set);

/// Least vertex witnessing the extension property for (U, W), if any.
std::optional<Vertex> extension_witness(const Graph& g, const VertexSet& u_set, const VertexSet& w_set);

/// Witness sets that transport the extension property through local
/// complementation at v:
///   v ∉ U:  (U, W ∪ {v})
///   v ∈ U:  ((U \ N(v)) ∪ (W ∩ N(v)),  (U ∩ N(v)) ∪ (W \ N(v)))
/// Any x ∉ U' ∪ W' with N_g(x) ∩ (U' ∪ W') = U' then has
/// N_{g_v}(x) ∩ (U ∪ W) = U. Throws on overlapping U, W.
std::pair<VertexSet, VertexSet> locomp_witness_sets(const Graph& g, Vertex v, const VertexSet& u_set,
                                                    const VertexSet& w_set);

/// The v ∈ U case with W' = (U ∩ N(v)) ∪ (U \ N(v)) = U, as it was originally
/// stated. Kept so tests can show where it breaks.
std::pair<VertexSet, VertexSet> locomp_witness_sets_as_printed(const Graph& g, Vertex v, const VertexSet& u_set,
                                                               const VertexSet& w_set);

struct ExtensionReport {
  struct Entry {
    VertexSet u_set;
    VertexSet w_set;
    std::optional<Vertex> witness;
  };
  std::vector<Entry> entries;  // every disjoint (U, W) over the ground set
  bool pass = true;

  /// One line per pair, `U={..} W={..} -> x` or `-> none`, then PASS or FAIL.
  std::string str() const;
};

/// Checks the extension property for every pair of disjoint U, W inside
/// `ground`. Pairs are enumerated by assigning each ground vertex to none, U
/// or W, base 3, least vertex fastest.
ExtensionReport check_extension(const Graph& g, const VertexSet& ground);

}  // namespace circlegraph
