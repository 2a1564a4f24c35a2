#include "circlegraph/acceptance.hpp"

namespace circlegraph {

namespace {

constexpr const char* kIncidentPair = "# two chords sharing the endpoint 0\nchord a 0 1/3\nchord b 0 2/3\n";
constexpr const char* kPathDiagram = "chord v 0 1/2\nchord a 1/4 3/4\nchord b 3/8 5/8\n";
constexpr const char* kIncidentTriangle = "chord a 0 1/3\nchord b 0 2/3\nchord c 1/3 2/3\n";
constexpr const char* kTwoEdges = "chord a 0 1/10\nchord b 0 1/5\nchord c 2/5 3/5\nchord e 1/2 7/10\n";
constexpr const char* kLooseDiagram = "chord p 1/7 5/7\nchord q 3/11 10/11\nchord r 2/13 3/13\n";
constexpr const char* kPath3 = "graph 3\nedge 0 1\nedge 1 2\n";
constexpr const char* kCycle6 = "graph 6\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\nedge 0 5\n";
constexpr const char* kWheel5 =
    "graph 6\nedge 0 1\nedge 0 2\nedge 0 3\nedge 0 4\nedge 0 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\nedge 1 5\n";
constexpr const char* kCycle5ThenPath4 =
    "graph 5\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\nedge 0 4\ngraph 4\nedge 0 1\nedge 1 2\nedge 2 3\n";
constexpr const char* kTwoDisjointEdges = "graph 4\nedge 0 1\nedge 2 3\n";
constexpr const char* kWitnessGraph = "graph 4\nedge 0 1\nedge 0 2\nedge 1 3\n";

}  // namespace

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"01_ig_closed", {"ig", "--mode", "closed", "-"}, kIncidentPair, 0},
      {"02_locomp", {"locomp", "--vertex", "1", "-"}, kPath3, 0},
      {"03_flip", {"flip", "--chord", "v", "-"}, kPathDiagram, 0},
      {"04_blowup", {"blowup", "-"}, kIncidentTriangle, 0},
      {"05_embed", {"embed", "-"}, "a b c a b c\n", 0},
      {"06_reembed", {"reembed", "-"}, kLooseDiagram, 0},
      {"07_word", {"word", "-"}, kPathDiagram, 0},
      {"08_realize", {"realize", "-"}, kCycle6, 0},
      {"09_check_circle_w5", {"check-circle", "--method", "both", "-"}, kWheel5, 1},
      {"10_vminors", {"vminors", "-"}, kPath3, 0},
      {"11_has_vminor", {"has-vminor", "-"}, kCycle5ThenPath4, 0},
      {"12_auts", {"auts", "-"}, kTwoDisjointEdges, 0},
      {"13_classes", {"classes", "-"}, kTwoEdges, 0},
      {"14_lift_fails", {"lift", "--perm", "(a c)(b e)", "-"}, kTwoEdges, 1},
      {"15_rado_witness", {"rado-witness", "--u", "0,1", "--w", "2"}, "", 0},
      {"16_locomp_witness_sets", {"locomp-witness-sets", "--vertex", "0", "--u", "0,1", "--w", "2", "-"}, kWitnessGraph, 0},
      {"17_check_extension", {"check-extension", "--bit-graph", "16", "--ground", "0,1,2"}, "", 0},
      {"18_render", {"render", "-"}, kPathDiagram, 0},
      {"19_obstructions", {"obstructions"}, "", 0},
      {"20_selftest_help", {"selftest", "--help"}, "", 0},
  };
  return cases;
}

}  // namespace circlegraph
