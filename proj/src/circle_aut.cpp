#include "circlegraph/circle_aut.hpp"

#include <algorithm>
#include <stdexcept>

namespace circlegraph {

BoundaryCliqueMap boundary_cliques(const ChordDiagram& d) {
  BoundaryCliqueMap out;
  for (int i = 0; i < d.size(); ++i) {
    out[d[i].chord.lo()].push_back(i);
    out[d[i].chord.hi()].push_back(i);
  }
  return out;
}

std::optional<EdgeKind> EdgeClasses::kind(int i, int j) const {
  if (i > j) std::swap(i, j);
  const std::pair<int, int> key{i, j};
  if (std::binary_search(incident.begin(), incident.end(), key)) return EdgeKind::Incident;
  if (std::binary_search(crossing.begin(), crossing.end(), key)) return EdgeKind::Crossing;
  return std::nullopt;
}

EdgeClasses edge_classes(const ChordDiagram& d) {
  EdgeClasses out;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) {
      if (d[i].chord.shared_endpoints(d[j].chord) == 1)
        out.incident.emplace_back(i, j);
      else if (intersects(d[i].chord, d[j].chord, IntersectionMode::CrossingOnly))
        out.crossing.emplace_back(i, j);
    }
  return out;
}

namespace {

const char* kind_name(EdgeKind k) { return k == EdgeKind::Incident ? "Incident" : "Crossing"; }

bool is_automorphism(const Graph& g, const Permutation& h) {
  if (static_cast<int>(h.size()) != g.size()) return false;
  std::vector<bool> hit(h.size(), false);
  for (int v : h) {
    if (v < 0 || v >= g.size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v) != g.adjacent(h[static_cast<std::size_t>(u)], h[static_cast<std::size_t>(v)])) return false;
  return true;
}

std::optional<LiftFailure> incidence_violation(const EdgeClasses& classes, const Permutation& h) {
  std::vector<std::pair<int, int>> edges = classes.incident;
  edges.insert(edges.end(), classes.crossing.begin(), classes.crossing.end());
  std::sort(edges.begin(), edges.end());
  for (auto [i, j] : edges) {
    auto from = *classes.kind(i, j);
    auto to = classes.kind(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)]);
    if (to && *to != from) {
      LiftFailure f;
      f.reason = LiftFailure::Reason::IncidenceViolation;
      f.pair = {i, j};
      f.image = std::minmax(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)]);
      f.from = from;
      f.to = *to;
      return f;
    }
  }
  return std::nullopt;
}

// Number of cyclic descents of the image sequence; 1 means the map is a rotation of the order.
int cyclic_descents(const std::vector<CirclePoint>& images) {
  int d = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[(i + 1) % images.size()] < images[i]) ++d;
  return d;
}

}  // namespace

std::string LiftFailure::describe(const ChordDiagram& d) const {
  switch (reason) {
    case Reason::IncidenceViolation:
      return std::string(kind_name(from)) + " pair {" + d[pair.first].name + "," + d[pair.second].name +
             "} sent to " + kind_name(to) + " pair {" +
             d[image.first].name + "," + d[image.second].name + "}";
    case Reason::BoundaryClique:
      return "chords at " + point->str() + " are not sent onto the chords at a single point";
    case Reason::Inconsistent:
      return "no endpoint map agrees with every chord";
  }
  return {};
}

LiftResult lift_automorphism(const ChordDiagram& d, const Permutation& h) {
  const Graph closed = intersection_graph(d, IntersectionMode::Closed);
  if (!is_automorphism(closed, h))
    throw std::invalid_argument("lift_automorphism: not an automorphism of the Closed intersection graph");

  LiftResult result;
  if (auto bad = incidence_violation(edge_classes(d), h)) {
    result.failure = bad;
    return result;
  }

  const auto cliques = boundary_cliques(d);
  std::vector<CirclePoint> points;
  std::vector<std::vector<CirclePoint>> candidates;
  for (const auto& [x, chords] : cliques) {
    std::vector<int> image;
    for (int c : chords) image.push_back(h[static_cast<std::size_t>(c)]);
    std::sort(image.begin(), image.end());
    std::vector<CirclePoint> ys;
    for (const auto& [y, at_y] : cliques) {
      auto sorted = at_y;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == image) ys.push_back(y);
    }
    if (ys.empty()) {
      LiftFailure f;
      f.reason = LiftFailure::Reason::BoundaryClique;
      f.point = x;
      result.failure = f;
      return result;
    }
    points.push_back(x);
    candidates.push_back(std::move(ys));
  }

  // Exhaustive search over consistent assignments in lexicographic order.
  const std::size_t m = points.size();
  std::vector<CirclePoint> image(m);
  std::vector<bool> taken(m, false);
  std::map<CirclePoint, std::size_t> slot;
  for (std::size_t i = 0; i < m; ++i) slot.emplace(points[i], i);
  std::vector<bool> assigned(m, false);

  std::optional<std::vector<CirclePoint>> first, preserving, reversing;
  constexpr std::size_t kMaxSolutions = 1 << 16;
  std::size_t solutions = 0;

  auto consistent = [&](std::size_t i) {
    for (int c : cliques.at(points[i])) {
      const Chord& chord = d[c].chord;
      const CirclePoint& other = chord.lo() == points[i] ? chord.hi() : chord.lo();
      const std::size_t j = slot.at(other);
      if (!assigned[j]) continue;
      const Chord& target = d[h[static_cast<std::size_t>(c)]].chord;
      if (!(Chord(image[i], image[j]) == target)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (solutions >= kMaxSolutions || preserving) return;
    if (i == m) {
      ++solutions;
      if (!first) first = image;
      int desc = cyclic_descents(image);
      if (m <= 2 || desc == 1) preserving = image;
      else if (!reversing && desc == static_cast<int>(m) - 1) reversing = image;
      return;
    }
    for (const auto& y : candidates[i]) {
      const std::size_t yi = slot.at(y);
      if (taken[yi]) continue;
      image[i] = y;
      assigned[i] = true;
      taken[yi] = true;
      if (consistent(i)) self(self, i + 1);
      taken[yi] = false;
      assigned[i] = false;
    }
  };
  recurse(recurse, 0);

  const auto& chosen = preserving ? preserving : reversing ? reversing : first;
  if (!chosen) {
    result.failure = LiftFailure{};
    result.failure->reason = LiftFailure::Reason::Inconsistent;
    return result;
  }
  EndpointMap lift;
  for (std::size_t i = 0; i < m; ++i) lift.emplace(points[i], (*chosen)[i]);
  result.lift = std::move(lift);
  return result;
}

std::vector<Permutation> class_preserving_automorphisms(const ChordDiagram& d) {
  if (d.size() > kMaxAutomorphismVertices)
    throw std::invalid_argument("class_preserving_automorphisms: more than 10 chords");
  const auto classes = edge_classes(d);
  std::vector<Permutation> out;
  for (auto& h : automorphisms(intersection_graph(d, IntersectionMode::Closed)))
    if (!incidence_violation(classes, h)) out.push_back(std::move(h));
  return out;
}

}  // namespace circlegraph
