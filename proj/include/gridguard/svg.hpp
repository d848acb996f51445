#pragma once

#include "gridguard/guarding.hpp"

#include <string>
#include <vector>

namespace gridguard {

// Layered drawing: guarding-region fills keyed by visible-list size, cell
// boundaries, the polygon outline, and guard markers. Coordinates are
// rounded to 6 decimals for display only. Throws IoError.
void render_svg(const SimplePolygon& P, const std::vector<ScRegion>& cells,
                const std::vector<GuardingRegion>& grs, const std::vector<Point>& guards,
                const std::string& path);

}  // namespace gridguard
