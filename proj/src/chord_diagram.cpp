#include "circlegraph/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace circlegraph {

Chord::Chord(CirclePoint a, CirclePoint b) {
  if (a == b) throw std::invalid_argument("chord endpoints coincide at " + a.str());
  if (b < a) std::swap(a, b);
  lo_ = std::move(a);
  hi_ = std::move(b);
}

int Chord::shared_endpoints(const Chord& other) const {
  return static_cast<int>(has_endpoint(other.lo_)) + static_cast<int>(has_endpoint(other.hi_));
}

bool intersects(const Chord& c1, const Chord& c2, IntersectionMode mode) {
  if (c1 == c2) throw std::invalid_argument("intersects: identical chords");
  if (interleaves(c1.endpoints(), c2.endpoints())) return true;
  return mode == IntersectionMode::Closed && c1.shared_endpoints(c2) == 1;
}

ChordDiagram::ChordDiagram(std::vector<NamedChord> chords) {
  for (auto& c : chords) add(std::move(c.name), std::move(c.chord));
}

void ChordDiagram::add(std::string name, Chord chord) {
  if (name.empty()) throw std::invalid_argument("empty chord name");
  for (const auto& c : chords_) {
    if (c.name == name) throw std::invalid_argument("duplicate chord name '" + name + "'");
    if (c.chord == chord) throw std::invalid_argument("chord '" + name + "' duplicates chord '" + c.name + "'");
  }
  chords_.push_back({std::move(name), std::move(chord)});
}

std::optional<int> ChordDiagram::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (chords_[static_cast<std::size_t>(i)].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> ChordDiagram::names() const {
  std::vector<std::string> out;
  out.reserve(chords_.size());
  for (const auto& c : chords_) out.push_back(c.name);
  return out;
}

bool ChordDiagram::is_generic() const {
  std::set<CirclePoint> seen;
  for (const auto& c : chords_)
    if (!seen.insert(c.chord.lo()).second || !seen.insert(c.chord.hi()).second) return false;
  return true;
}

std::vector<CirclePoint> ChordDiagram::points() const {
  std::set<CirclePoint> pts;
  for (const auto& c : chords_) {
    pts.insert(c.chord.lo());
    pts.insert(c.chord.hi());
  }
  return {pts.begin(), pts.end()};
}

DOWord::DOWord(std::vector<std::string> letters) : letters_(std::move(letters)) {
  std::map<std::string, int> count;
  for (const auto& l : letters_) {
    if (l.empty()) throw std::invalid_argument("empty symbol in word");
    ++count[l];
  }
  for (const auto& [sym, c] : count)
    if (c != 2) throw std::invalid_argument("symbol '" + sym + "' occurs " + std::to_string(c) + " times, expected 2");
}

std::vector<std::string> DOWord::alphabet() const {
  std::vector<std::string> out;
  for (const auto& l : letters_)
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  return out;
}

DOWord DOWord::canonical() const {
  const std::size_t len = letters_.size();
  std::vector<std::string> best = letters_;
  std::vector<std::string> candidate(len);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < len; ++shift) {
      for (std::size_t i = 0; i < len; ++i) {
        std::size_t src = reflect ? (shift + len - i) % len : (shift + i) % len;
        candidate[i] = letters_[src];
      }
      if (candidate < best) best = candidate;
    }
  }
  DOWord out;
  out.letters_ = std::move(best);
  return out;
}

std::string DOWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i];
  }
  return out;
}

Graph DOWord::interlacement_graph() const {
  auto alpha = alphabet();
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < alpha.size(); ++i) index[alpha[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pos(alpha.size(), {-1, -1});
  for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
    auto& p = pos[static_cast<std::size_t>(index[letters_[static_cast<std::size_t>(i)]])];
    (p.first < 0 ? p.first : p.second) = i;
  }
  Graph g(static_cast<int>(alpha.size()), alpha);
  for (std::size_t a = 0; a < alpha.size(); ++a)
    for (std::size_t b = a + 1; b < alpha.size(); ++b) {
      bool first_in = pos[a].first < pos[b].first && pos[b].first < pos[a].second;
      bool second_in = pos[a].first < pos[b].second && pos[b].second < pos[a].second;
      if (first_in != second_in) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  return g;
}

Graph intersection_graph(const ChordDiagram& d, IntersectionMode mode) {
  Graph g(d.size(), d.names());
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (intersects(d[i].chord, d[j].chord, mode)) g.add_edge(i, j);
  return g;
}

DOWord to_word(const ChordDiagram& d) {
  if (!d.is_generic()) throw std::invalid_argument("to_word: diagram is not in generic position");
  std::vector<std::pair<CirclePoint, const std::string*>> ends;
  for (const auto& c : d.chords()) {
    ends.emplace_back(c.chord.lo(), &c.name);
    ends.emplace_back(c.chord.hi(), &c.name);
  }
  std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> letters;
  letters.reserve(ends.size());
  for (const auto& e : ends) letters.push_back(*e.second);
  return DOWord(std::move(letters));
}

ChordDiagram embed_word(const DOWord& w) {
  const auto& letters = w.letters();
  const long total = static_cast<long>(letters.size());
  std::map<std::string, std::vector<long>> positions;
  for (long i = 0; i < total; ++i) positions[letters[static_cast<std::size_t>(i)]].push_back(i);
  ChordDiagram d;
  for (const auto& name : w.alphabet()) {
    const auto& p = positions[name];
    d.add(name, Chord(CirclePoint(p[0], total), CirclePoint(p[1], total)));
  }
  return d;
}

ChordDiagram reembed_incremental(const ChordDiagram& d) {
  std::map<CirclePoint, CirclePoint> image;
  auto place = [&](const CirclePoint& p) {
    if (image.contains(p)) return;
    auto succ = image.upper_bound(p);
    if (succ == image.end()) succ = image.begin();
    auto pred = image.lower_bound(p);
    pred = pred == image.begin() ? std::prev(image.end()) : std::prev(pred);
    image.emplace(p, insert_between(pred->second, succ->second));
  };

  ChordDiagram out;
  for (int i = 0; i < d.size(); ++i) {
    const auto& c = d[i].chord;
    if (image.empty()) {
      image.emplace(c.lo(), CirclePoint(0, 1));
      image.emplace(c.hi(), CirclePoint(1, 2));
    } else {
      place(c.lo());
      place(c.hi());
    }
    out.add(d[i].name, Chord(image.at(c.lo()), image.at(c.hi())));
  }
  return out;
}

ChordDiagram blow_up(const ChordDiagram& d) {
  const auto pts = d.points();
  const long m = static_cast<long>(pts.size());
  if (m == 0) return d;
  std::map<CirclePoint, long> point_index;
  for (long i = 0; i < m; ++i) point_index.emplace(pts[static_cast<std::size_t>(i)], i);

  // For each original point: (chord index, opposite endpoint) of incident chords.
  std::vector<std::vector<std::pair<int, CirclePoint>>> incident(static_cast<std::size_t>(m));
  for (int i = 0; i < d.size(); ++i) {
    const auto& c = d[i].chord;
    incident[static_cast<std::size_t>(point_index.at(c.lo()))].emplace_back(i, c.hi());
    incident[static_cast<std::size_t>(point_index.at(c.hi()))].emplace_back(i, c.lo());
  }

  // Point i moves to i/m and owns the arc of radius 1/(4m) around it.
  std::vector<std::pair<CirclePoint, CirclePoint>> ends(static_cast<std::size_t>(d.size()));
  std::vector<int> filled(static_cast<std::size_t>(d.size()), 0);
  const Rational radius(1, 4 * m);
  for (long i = 0; i < m; ++i) {
    auto& at = incident[static_cast<std::size_t>(i)];
    const CirclePoint& q = pts[static_cast<std::size_t>(i)];
    std::sort(at.begin(), at.end(), [&](const auto& a, const auto& b) {
      return a.second == b.second ? a.first < b.first : cyclic_between(q, a.second, b.second);
    });
    const long k = static_cast<long>(at.size());
    const Rational start = Rational(i, m) - radius;
    const Rational step = radius * Rational(2) / Rational(k + 1);
    for (long j = 0; j < k; ++j) {
      CirclePoint p = CirclePoint::wrap(start + step * Rational(j + 1));
      auto ci = static_cast<std::size_t>(at[static_cast<std::size_t>(j)].first);
      (filled[ci]++ == 0 ? ends[ci].first : ends[ci].second) = p;
    }
  }
  ChordDiagram out;
  for (int i = 0; i < d.size(); ++i) {
    const auto& e = ends[static_cast<std::size_t>(i)];
    out.add(d[i].name, Chord(e.first, e.second));
  }
  return out;
}

ChordDiagram flip_interval(const ChordDiagram& d, const std::string& v) {
  if (!d.is_generic()) throw std::invalid_argument("flip_interval: diagram is not in generic position");
  auto idx = d.index_of(v);
  if (!idx) throw std::invalid_argument("flip_interval: unknown chord '" + v + "'");
  const CirclePoint s = d[*idx].chord.lo();
  const CirclePoint t = d[*idx].chord.hi();
  auto move = [&](const CirclePoint& x) { return cyclic_between(s, x, t) ? reflect_in_arc(s, t, x) : x; };
  ChordDiagram out;
  for (const auto& c : d.chords()) out.add(c.name, Chord(move(c.chord.lo()), move(c.chord.hi())));
  return out;
}

}  // namespace circlegraph
