#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/geometry.hpp"

namespace stair {

// One plot: scaled staircase dots, the inner hull outline, and optionally the
// exact limit body as a shaded polygon behind them.
struct SvgPanel {
    std::string label;
    std::vector<QPt> dots;
    std::optional<RatPolygon> inner;
    std::optional<RatPolygon> overlay;
};

// Deterministic SVG: fixed viewBox derived from world_max, fixed attribute
// order, exact decimal coordinates, elements in input order.
std::string render_panels_svg(const std::vector<SvgPanel>& panels, const QPt& world_max);

// exact decimal expansion with a fixed number of fractional digits
std::string fixed_decimal(const Rat& q, int digits);

} // namespace stair
