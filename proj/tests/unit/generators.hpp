// Random inputs for the property tests. Fixed seeds keep failures reproducible.
#pragma once

#include "circlegraph/chord_diagram.hpp"
#include "circlegraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testgen {

using namespace circlegraph;

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::string chord_name(int i) { return Graph::default_name(i); }

// n chords on 2n distinct points k/den, den >= 2n.
inline ChordDiagram random_generic_diagram(std::mt19937_64& rng, int n, long den = 97) {
  std::vector<long> pts(static_cast<std::size_t>(den));
  std::iota(pts.begin(), pts.end(), 0L);
  std::shuffle(pts.begin(), pts.end(), rng);
  ChordDiagram d;
  for (int i = 0; i < n; ++i)
    d.add(chord_name(i), Chord(CirclePoint(pts[2 * i], den), CirclePoint(pts[2 * i + 1], den)));
  return d;
}

// Chords on few points, so endpoints are often shared.
inline ChordDiagram random_diagram(std::mt19937_64& rng, int n, long den = 6) {
  std::uniform_int_distribution<long> pick(0, den - 1);
  ChordDiagram d;
  int tries = 0;
  while (d.size() < n && tries++ < 1000) {
    long a = pick(rng), b = pick(rng);
    if (a == b) continue;
    Chord c(CirclePoint(a, den), CirclePoint(b, den));
    bool dup = std::any_of(d.chords().begin(), d.chords().end(), [&](const NamedChord& x) { return x.chord == c; });
    if (!dup) d.add(chord_name(d.size()), c);
  }
  return d;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {  // a after b
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<Vertex>(i);
  return r;
}

}  // namespace testgen
