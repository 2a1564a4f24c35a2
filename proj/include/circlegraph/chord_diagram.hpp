#pragma once

#include "circlegraph/cyclic.hpp"
#include "circlegraph/graph.hpp"

#include <string>
#include <vector>

namespace circlegraph {

/// Segment joining two distinct circle points; endpoints stored sorted.
class Chord {
public:
  Chord(CirclePoint a, CirclePoint b);

  const CirclePoint& lo() const { return lo_; }
  const CirclePoint& hi() const { return hi_; }
  PointPair endpoints() const { return {lo_, hi_}; }
  bool has_endpoint(const CirclePoint& p) const { return p == lo_ || p == hi_; }
  /// Number of endpoints shared with `other` (0, 1 or 2).
  int shared_endpoints(const Chord& other) const;

  friend bool operator==(const Chord&, const Chord&) = default;

private:
  CirclePoint lo_;
  CirclePoint hi_;
};

enum class IntersectionMode { Closed, CrossingOnly };

/// Closed: chords meet anywhere, including a shared endpoint on the circle.
/// CrossingOnly: chords cross at an interior point of the disc.
/// Throws std::invalid_argument when c1 == c2.
bool intersects(const Chord& c1, const Chord& c2, IntersectionMode mode);

struct NamedChord {
  std::string name;
  Chord chord;
  friend bool operator==(const NamedChord&, const NamedChord&) = default;
};

/// Ordered sequence of named chords. Names are unique, chords pairwise distinct.
class ChordDiagram {
public:
  ChordDiagram() = default;
  explicit ChordDiagram(std::vector<NamedChord> chords);

  void add(std::string name, Chord chord);

  int size() const { return static_cast<int>(chords_.size()); }
  bool empty() const { return chords_.empty(); }
  const std::vector<NamedChord>& chords() const { return chords_; }
  const NamedChord& operator[](int i) const { return chords_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const std::string& name) const;
  std::vector<std::string> names() const;

  /// No endpoint is shared between two chords.
  bool is_generic() const;
  /// All distinct endpoints in increasing order.
  std::vector<CirclePoint> points() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
  std::vector<NamedChord> chords_;
};

/// Cyclic word in which each name occurs exactly twice. The stored sequence
/// is kept as given; equality is up to rotation and reflection.
class DOWord {
public:
  DOWord() = default;
  explicit DOWord(std::vector<std::string> letters);

  const std::vector<std::string>& letters() const { return letters_; }
  int symbol_count() const { return static_cast<int>(letters_.size() / 2); }
  /// Distinct names in order of first occurrence.
  std::vector<std::string> alphabet() const;

  /// Lexicographically least rotation or reflection.
  DOWord canonical() const;
  std::string str() const;

  /// Symbols are adjacent iff their occurrences alternate. Vertex order
  /// follows `alphabet()`.
  Graph interlacement_graph() const;

  friend bool operator==(const DOWord& a, const DOWord& b) { return a.canonical().letters_ == b.canonical().letters_; }

private:
  std::vector<std::string> letters_;
};

/// Labeled intersection graph; vertex i is chord i, named after it.
Graph intersection_graph(const ChordDiagram& d, IntersectionMode mode);

/// Names in counterclockwise endpoint order starting from 0. Requires a generic diagram.
DOWord to_word(const ChordDiagram& d);

/// Uniform placement: occurrence i of 2n sits at i/(2n).
ChordDiagram embed_word(const DOWord& w);

/// Rebuilds the diagram chord by chord, placing each new endpoint at the
/// midpoint of the gap between its already-placed cyclic neighbours. The first
/// chord becomes (0, 1/2). Preserves the cyclic order of all endpoints.
ChordDiagram reembed_incremental(const ChordDiagram& d);

/// Replaces each endpoint by a cluster of distinct endpoints so that formerly
/// incident chords cross. Output is generic and its CrossingOnly graph equals
/// the input's Closed graph.
ChordDiagram blow_up(const ChordDiagram& d);

/// Reflects every endpoint strictly inside the arc (lo, hi) of chord `v`.
/// Realizes local complementation at v on the CrossingOnly graph.
ChordDiagram flip_interval(const ChordDiagram& d, const std::string& v);

}  // namespace circlegraph
