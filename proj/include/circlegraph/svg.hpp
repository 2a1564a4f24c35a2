#pragma once

#include "circlegraph/chord_diagram.hpp"

#include <string>

namespace circlegraph {

/// Unit circle in a 512x512 viewport, one <line> per chord and one <text>
/// label at each chord midpoint. Coordinates use 12 significant digits.
std::string render_svg(const ChordDiagram& d);

}  // namespace circlegraph
