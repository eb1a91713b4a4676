#pragma once

#include <optional>
#include <string>
#include <utility>

#include "circlepack/geometry.hpp"

namespace circlepack {

// Renders the instance as a standalone SVG: the bounding square as a
// rectangle, each obstacle as an outlined circle, and (when present) the
// solution as a filled circle with a cross marker at its center and a
// radius label. The y axis is flipped so the drawing matches mathematical
// orientation. Output is deterministic and diffable.
std::string render_svg(const PackingInstance& inst,
                       const std::optional<std::pair<Point2, double>>& solution);

}  // namespace circlepack
