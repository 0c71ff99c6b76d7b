#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmcut/cells.hpp"
#include "pmcut/family.hpp"

namespace pmcut {

// Drawing frame: the main window plus optional zoom panels, each rendered as
// its own square of size_px. Zoom windows contained in another panel's window
// are also outlined there in red.
struct Viewport {
    ParamPoint window_lo{Rational(0), Rational(0)};
    ParamPoint window_hi{Rational(1), Rational(1)};
    std::vector<std::pair<ParamPoint, ParamPoint>> zooms;
    int size_px = 640;
    int margin_px = 40;
};

// Deterministic standalone SVG: one filled polygon per cell per panel it
// intersects, certificate points as markers, no resampling (polygon vertices
// are the exact cell vertices, decimalized at 12 significant digits).
std::string render_svg(const CellDiagram& diagram, const std::vector<Certificate>& certs,
                       const Viewport& viewport);

} // namespace pmcut
