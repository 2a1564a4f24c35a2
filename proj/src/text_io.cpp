#include "circlegraph/text_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace circlegraph {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Calls fn(line_number, tokens) for every non-empty line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto toks = tokens_of(line);
    if (!toks.empty()) fn(line_no, toks);
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view s, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    fail(line, "expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

ChordDiagram parse_diagram(std::string_view text) {
  ChordDiagram d;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& t) {
    if (t[0] != "chord" || t.size() != 4) fail(line, "expected 'chord <name> <rational> <rational>'");
    try {
      d.add(t[1], Chord(CirclePoint::parse(t[2]), CirclePoint::parse(t[3])));
    } catch (const ParseError& e) {
      fail(line, e.what());
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
  });
  return d;
}

std::string format_diagram(const ChordDiagram& d) {
  std::string out;
  for (const auto& c : d.chords())
    out += "chord " + c.name + " " + c.chord.lo().str() + " " + c.chord.hi().str() + "\n";
  return out;
}

DOWord parse_word(std::string_view text) {
  std::vector<std::string> letters;
  std::size_t lines = 0;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& t) {
    if (++lines > 1) fail(line, "a word occupies a single line");
    letters = t;
  });
  try {
    return DOWord(std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("word: ") + e.what());
  }
}

std::string format_word(const DOWord& w) { return w.str() + "\n"; }

std::vector<Graph> parse_graphs(std::string_view text) {
  std::vector<Graph> out;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& t) {
    if (t[0] == "graph") {
      if (t.size() != 2) fail(line, "expected 'graph <n>'");
      int n = parse_int(t[1], line);
      if (n > Graph::kMaxVertices) fail(line, "graph has more than 64 vertices");
      out.emplace_back(n);
    } else if (t[0] == "edge") {
      if (t.size() != 3) fail(line, "expected 'edge <u> <v>'");
      if (out.empty()) fail(line, "edge before 'graph' header");
      int u = parse_int(t[1], line);
      int v = parse_int(t[2], line);
      auto& g = out.back();
      if (u >= g.size() || v >= g.size()) fail(line, "edge endpoint out of range");
      if (u == v) fail(line, "self-loop");
      if (g.adjacent(u, v)) fail(line, "duplicate edge");
      g.add_edge(u, v);
    } else {
      fail(line, "unknown directive '" + t[0] + "'");
    }
  });
  return out;
}

Graph parse_graph(std::string_view text) {
  auto gs = parse_graphs(text);
  if (gs.size() != 1) throw ParseError("expected exactly one graph, found " + std::to_string(gs.size()));
  return gs.front();
}

std::string format_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Permutation parse_permutation(std::string_view text, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  auto lookup = [&](const std::string& name) {
    for (int i = 0; i < n; ++i)
      if (names[static_cast<std::size_t>(i)] == name) return i;
    throw ParseError("permutation: unknown name '" + name + "'");
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("permutation: expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("permutation: missing ')'");
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::vector<int> cycle;
    for (std::string tok; in >> tok;) {
      int v = lookup(tok);
      if (seen[static_cast<std::size_t>(v)]) throw ParseError("permutation: '" + tok + "' appears twice");
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
    skip_ws();
  }
  return p;
}

std::string format_permutation(const Permutation& p, const std::vector<std::string>& names) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    for (std::size_t v = start; !done[v]; v = static_cast<std::size_t>(p[v])) {
      if (v != start) out += " ";
      out += names[v];
      done[v] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::set<int> parse_vertex_set(std::string_view text) {
  std::set<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) throw ParseError("vertex set: empty item");
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || v < 0)
      throw ParseError("vertex set: bad vertex '" + std::string(item) + "'");
    if (!out.insert(v).second) throw ParseError("vertex set: repeated vertex " + std::to_string(v));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

std::string format_vertex_set(const std::set<int>& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace circlegraph
