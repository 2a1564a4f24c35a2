#include "circlegraph/text_io.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace circlegraph;

TEST_CASE("diagram format") {
  auto d = parse_diagram("# two chords\nchord a 0 1/3\n\nchord b 0 2/4  # trailing comment\n");
  REQUIRE(d.size() == 2);
  CHECK(d[1].chord.hi() == CirclePoint(1, 2));
  CHECK(format_diagram(d) == "chord a 0 1/3\nchord b 0 1/2\n");
  CHECK(parse_diagram("chord a 1 1/2")[0].chord.lo() == CirclePoint(0, 1));
  CHECK(parse_diagram("").empty());
}

TEST_CASE("diagram errors carry line numbers") {
  auto fails_on = [](const std::string& text, const std::string& where) {
    try {
      parse_diagram(text);
    } catch (const ParseError& e) {
      return std::string(e.what()).find(where) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_on("chord a 0 1/2\nchord b 1/0 1/2\n", "line 2"));
  CHECK(fails_on("chord a 0\n", "line 1"));
  CHECK(fails_on("chord a 0 1/2 3/4\n", "line 1"));
  CHECK(fails_on("line a 0 1/2\n", "line 1"));
  CHECK(fails_on("chord a 0 3/2\n", "line 1"));
  CHECK(fails_on("chord a 1/4 1/4\n", "line 1"));
  CHECK(fails_on("chord a 0 1/2\n\nchord a 1/4 3/4\n", "line 3"));
}

TEST_CASE("word format") {
  CHECK(parse_word("a b a b\n").str() == "a b a b");
  CHECK(format_word(parse_word("# w\nx y y x")) == "x y y x\n");
  CHECK_THROWS_AS(parse_word("a b a"), ParseError);
  CHECK_THROWS_AS(parse_word("a b\nb a"), ParseError);
}

TEST_CASE("graph format") {
  Graph g = parse_graph("graph 3\nedge 0 1\nedge 2 1\n");
  CHECK(g == path_graph(3));
  CHECK(format_graph(g) == "graph 3\nedge 0 1\nedge 1 2\n");
  CHECK(parse_graph("graph 0\n").size() == 0);
  CHECK_THROWS_AS(parse_graph("edge 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\nedge 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\nedge 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\nedge 0 1\nedge 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 65\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\ngraph 2\n"), ParseError);
  CHECK(parse_graphs("graph 1\ngraph 2\nedge 0 1\n").size() == 2);
}

TEST_CASE("permutations and vertex sets") {
  std::vector<std::string> names = {"a", "b", "c", "e"};
  Permutation p = parse_permutation("(a c)(b e)", names);
  CHECK(p == Permutation{2, 3, 0, 1});
  CHECK(format_permutation(p, names) == "(a c)(b e)");
  CHECK(parse_permutation("()", names) == Permutation{0, 1, 2, 3});
  CHECK(format_permutation({0, 1, 2, 3}, names) == "()");
  CHECK(format_permutation({1, 2, 0, 3}, names) == "(a b c)");
  CHECK_THROWS_AS(parse_permutation("(a z)", names), ParseError);
  CHECK_THROWS_AS(parse_permutation("(a b)(b c)", names), ParseError);
  CHECK_THROWS_AS(parse_permutation("(a b", names), ParseError);

  CHECK(parse_vertex_set("") == std::set<int>{});
  CHECK(parse_vertex_set("3,1") == std::set<int>{1, 3});
  CHECK(format_vertex_set({0, 2}) == "0,2");
  CHECK(parse_vertex_set(format_vertex_set({4, 7, 9})) == std::set<int>{4, 7, 9});
  CHECK_THROWS_AS(parse_vertex_set("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_vertex_set("-1"), ParseError);
  CHECK_THROWS_AS(parse_vertex_set("1,1"), ParseError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = testgen::random_diagram(rng, trial % 9, 2 + trial % 17);
    std::string text = format_diagram(d);
    CHECK(parse_diagram(text) == d);
    CHECK(format_diagram(parse_diagram(text)) == text);

    Graph g = testgen::random_graph(rng, trial % 12);
    CHECK(parse_graph(format_graph(g)) == g);

    if (d.is_generic() && !d.empty()) {
      DOWord w = to_word(d);
      DOWord back = parse_word(format_word(w));
      CHECK(back.letters() == w.letters());
    }
  }
}
