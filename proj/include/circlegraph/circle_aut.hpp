#pragma once

#include "circlegraph/chord_diagram.hpp"
#include "circlegraph/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace circlegraph {

/// Point -> indices (diagram order) of the chords ending there.
using BoundaryCliqueMap = std::map<CirclePoint, std::vector<int>>;

BoundaryCliqueMap boundary_cliques(const ChordDiagram& d);

enum class EdgeKind { Incident, Crossing };

/// Closed-mode edges split by how the chords meet.
struct EdgeClasses {
  std::vector<std::pair<int, int>> incident;
  std::vector<std::pair<int, int>> crossing;
  /// Kind of the Closed-mode edge {i, j}; nullopt when the chords are disjoint.
  std::optional<EdgeKind> kind(int i, int j) const;
};

EdgeClasses edge_classes(const ChordDiagram& d);

/// Which step of the lifting argument broke.
struct LiftFailure {
  enum class Reason {
    IncidenceViolation,  // an Incident pair went to a Crossing pair or back
    BoundaryClique,      // the chords at a point do not go onto the chords at one point
    Inconsistent,        // boundary cliques match but no endpoint map fits every chord
  };
  Reason reason = Reason::Inconsistent;
  std::pair<int, int> pair{-1, -1};  // offending chord pair (IncidenceViolation)
  std::pair<int, int> image{-1, -1};  // where h sends it
  EdgeKind from = EdgeKind::Incident;
  EdgeKind to = EdgeKind::Incident;
  std::optional<CirclePoint> point;  // offending point (BoundaryClique)

  std::string describe(const ChordDiagram& d) const;
};

/// Endpoint map h' with h'(x) for every endpoint x of the diagram.
using EndpointMap = std::map<CirclePoint, CirclePoint>;

struct LiftResult {
  std::optional<EndpointMap> lift;
  std::optional<LiftFailure> failure;
  explicit operator bool() const { return lift.has_value(); }
};

/// Lifts an automorphism h of the Closed-mode intersection graph to a map on
/// endpoints that sends each chord {u, v} to h(chord) = {h'(u), h'(v)}.
/// Among all consistent maps, prefers one preserving cyclic order, then one
/// reversing it, then the lexicographically first.
/// Throws std::invalid_argument if h is not an automorphism.
LiftResult lift_automorphism(const ChordDiagram& d, const Permutation& h);

/// Automorphisms of the Closed-mode graph that keep Incident and Crossing
/// edges in their classes. At most 10 chords.
std::vector<Permutation> class_preserving_automorphisms(const ChordDiagram& d);

}  // namespace circlegraph
