#include "circlegraph/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace circlegraph {

namespace {

std::string num(double v) {
  if (std::fabs(v) < 1e-15) v = 0.0;  // avoid "-0" and 1e-17 noise from cos/sin
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Screen coordinates: counterclockwise from the positive x axis, y pointing down.
std::pair<double, double> locate(const CirclePoint& p) {
  const double angle = 2.0 * std::numbers::pi * p.value().to_double();
  return {std::cos(angle), -std::sin(angle)};
}

}  // namespace

std::string render_svg(const ChordDiagram& d) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n"
      "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
  for (const auto& c : d.chords()) {
    auto [x1, y1] = locate(c.chord.lo());
    auto [x2, y2] = locate(c.chord.hi());
    out += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
           "\" stroke=\"steelblue\" stroke-width=\"0.01\"/>\n";
  }
  for (const auto& c : d.chords()) {
    auto [x1, y1] = locate(c.chord.lo());
    auto [x2, y2] = locate(c.chord.hi());
    out += "  <text x=\"" + num((x1 + x2) / 2) + "\" y=\"" + num((y1 + y2) / 2) +
           "\" font-size=\"0.06\" text-anchor=\"middle\">" + escape(c.name) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace circlegraph
