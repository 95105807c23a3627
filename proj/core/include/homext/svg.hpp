#pragma once

#include <optional>
#include <string>

#include "homext/annulus.hpp"

namespace homext {

// Deterministic SVG of an arc diagram: concentric boundary circles, labeled
// marked points, arcs drawn with winding unrolled, heart arcs highlighted
// when the diagram is exceptional and complete. A closed curve of the given
// winding is overlaid when requested.
std::string render_svg(const ArcDiagram& d, std::optional<ClosedCurve> curve = std::nullopt);

}  // namespace homext
