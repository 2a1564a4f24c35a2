#pragma once

#include "circlegraph/chord_diagram.hpp"
#include "circlegraph/graph.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace circlegraph {

// Line-oriented formats. `#` starts a comment; blank lines are ignored.
// Every parser throws ParseError with a line number on malformed input.

/// `chord <name> <rational> <rational>` per line.
ChordDiagram parse_diagram(std::string_view text);
std::string format_diagram(const ChordDiagram& d);

/// Whitespace-separated names on one line, each exactly twice.
DOWord parse_word(std::string_view text);
std::string format_word(const DOWord& w);

/// `graph <n>` followed by `edge <u> <v>` lines (0-based).
Graph parse_graph(std::string_view text);
/// Several graphs back to back; each `graph <n>` header starts a new one.
std::vector<Graph> parse_graphs(std::string_view text);
/// Edges emitted with u < v in lexicographic order.
std::string format_graph(const Graph& g);

/// Cycle notation over vertex names, e.g. `(a c)(b e)`; `()` is the identity.
Permutation parse_permutation(std::string_view text, const std::vector<std::string>& names);
/// Fixed points omitted; cycles start at their least index.
std::string format_permutation(const Permutation& p, const std::vector<std::string>& names);

/// Comma-separated non-negative integers; empty string is the empty set.
std::set<int> parse_vertex_set(std::string_view text);
std::string format_vertex_set(const std::set<int>& s);

}  // namespace circlegraph
