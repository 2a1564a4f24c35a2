#include "circlegraph/cli.hpp"
#include "circlegraph/acceptance.hpp"
#include "circlegraph/text_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace circlegraph;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kIncident = "chord a 0 1/3\nchord b 0 2/3\n";
const char* kPath = "chord v 0 1/2\nchord a 1/4 3/4\nchord b 3/8 5/8\n";

}  // namespace

TEST_CASE("ig") {
  auto r = run({"ig", "--mode", "closed", "-"}, kIncident);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "graph 2\nedge 0 1\n");
  CHECK(run({"ig", "--mode", "crossing", "-"}, kIncident).out == "graph 2\n");
  CHECK(run({"ig", "-"}, kIncident).out == "graph 2\nedge 0 1\n");
  CHECK(run({"ig", "--mode", "sideways", "-"}, kIncident).code == kExitError);
}

TEST_CASE("errors are one line on stderr with exit 2") {
  auto bad = run({"ig", "-"}, "chord a 0 1/0\n");
  CHECK(bad.code == kExitError);
  CHECK(bad.out.empty());
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

  CHECK(run({"ig", "/nonexistent/diagram.txt"}).code == kExitError);
  CHECK(run({"frobnicate"}).code == kExitError);
  CHECK(run({}).code == kExitError);
  CHECK(run({"flip", "--chord", "zz", "-"}, kPath).code == kExitError);
  CHECK(run({"locomp", "--vertex", "9", "-"}, "graph 3\n").code == kExitError);
  CHECK(run({"word", "-"}, kIncident).code == kExitError);
  CHECK(run({"rado-witness", "--u", "1", "--w", "1"}).code == kExitError);
  CHECK(run({"lift", "--perm", "(a c)", "-"}, "chord a 0 1/2\nchord b 1/4 3/4\nchord c 1/8 3/16\n").code == kExitError);
}

TEST_CASE("check-circle") {
  auto w5 = run({"check-circle", "--method", "both", "-"}, format_graph(wheel_graph(5)));
  CHECK(w5.code == kExitNegative);
  CHECK(w5.out == "NOT_CIRCLE\nobstruction: W5\ntrace: identity\n");
  auto c6 = run({"check-circle", "-"}, format_graph(cycle_graph(6)));
  CHECK(c6.code == kExitOk);
  CHECK(c6.out.rfind("CIRCLE\nword: ", 0) == 0);
  CHECK(run({"realize", "-"}, format_graph(wheel_graph(5))).out == "NOT_CIRCLE\n");
}

TEST_CASE("pipelines compose") {
  auto flipped = run({"flip", "--chord", "v", "-"}, kPath);
  REQUIRE(flipped.code == kExitOk);
  auto ig = run({"ig", "--mode", "crossing", "-"}, flipped.out);
  CHECK(ig.out == format_graph(complete_graph(3)));

  auto blown = run({"blowup", "-"}, "chord a 0 1/3\nchord b 0 2/3\nchord c 1/3 2/3\n");
  REQUIRE(blown.code == kExitOk);
  CHECK(parse_diagram(blown.out).is_generic());
  CHECK(run({"word", "-"}, blown.out).code == kExitOk);
}

TEST_CASE("render writes a file") {
  auto path = std::filesystem::temp_directory_path() / "circlegraph_render_test.svg";
  auto r = run({"render", "-o", path.string(), "-"}, kPath);
  CHECK(r.code == kExitOk);
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str() == *golden_output("18_render"));
  std::filesystem::remove(path);
}

TEST_CASE("extension and lifting exit codes") {
  CHECK(run({"check-extension", "--bit-graph", "4", "--ground", "0,1,2,3"}).code == kExitNegative);
  CHECK(run({"check-extension", "-", "--ground", ""}, "graph 2\nedge 0 1\n").code == kExitOk);
  auto lift = run({"lift", "--perm", "(a b)", "-"}, "chord a 0 1/2\nchord b 1/4 3/4\n");
  CHECK(lift.code == kExitOk);
  CHECK(lift.out == "LIFT\n0 -> 1/4\n1/4 -> 1/2\n1/2 -> 3/4\n3/4 -> 0\n");
}

TEST_CASE("golden corpus") {
  for (const auto& c : golden_cases()) {
    INFO(c.id);
    auto r = run(c.args, c.stdin_text);
    CHECK(r.code == c.exit_code);
    const std::string* expected = golden_output(c.id);
    REQUIRE(expected);
    CHECK(r.out == *expected);
  }
}
