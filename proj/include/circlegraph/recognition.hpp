#pragma once

#include "circlegraph/chord_diagram.hpp"
#include "circlegraph/graph.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace circlegraph {

inline constexpr int kMaxSearchVertices = 8;

/// Labeled search for a double occurrence word whose interlacement graph is
/// g itself. Returns the witness in canonical form, named by g's vertex names.
std::optional<DOWord> realize_brute_force(const Graph& g);

struct MinorStep {
  enum class Kind { LocalComplement, DeleteVertex };
  Kind kind;
  Vertex vertex;  // vertex index in the source graph
  friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

/// Sequence of local complementations and deletions applied to a source graph.
struct VertexMinorTrace {
  std::vector<MinorStep> steps;

  /// Applies the steps to `source`. Surviving vertices keep their relative
  /// order and names.
  Graph replay(const Graph& source) const;
  std::string str(const Graph& source) const;
};

/// Canonical forms of every vertex minor of g with at least `min_vertices`
/// vertices, g included.
std::set<CanonicalForm> vertex_minor_closure(const Graph& g, int min_vertices = 0);

struct VertexMinorMatch {
  VertexMinorTrace trace;
  Graph minor;        // trace.replay(g)
  Permutation to_h;   // isomorphism minor -> h
};

/// A replayable trace turning g into a graph isomorphic to h, if h is a vertex minor.
std::optional<VertexMinorMatch> has_vertex_minor(const Graph& g, const Graph& h);

struct Obstruction {
  std::string name;  // W5, W7 or BW3
  Graph graph;
};

/// The three forbidden vertex minors of circle graphs.
const std::vector<Obstruction>& obstructions();
/// Graph-format text of the obstruction table.
const std::string& obstruction_text();

enum class RecognitionMethod { Brute, Obstruction, Both };

struct CircleVerdict {
  bool is_circle = false;
  std::optional<DOWord> witness;          // set when the brute search ran and succeeded
  std::optional<std::string> obstruction; // set when an obstruction was found
  std::optional<VertexMinorTrace> trace;  // trace from g to that obstruction
};

/// The two recognizers disagree: either the obstruction table or the word
/// search is wrong.
class OracleDisagreement : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

CircleVerdict is_circle_graph(const Graph& g, RecognitionMethod method);

}  // namespace circlegraph
