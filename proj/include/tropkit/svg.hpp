#pragma once

#include <string>

#include "tropkit/patchwork.hpp"
#include "tropkit/plane_curve.hpp"

namespace tropkit {

// SVG 1.1 drawing of the curve in a fixed 400x400 viewport. Unbounded edges
// are clipped at the frame; weights above one are printed next to the edge.
// The output depends only on the exact coordinates.
std::string curve_svg(const PlaneCurve& c);

// Four panels, one per open quadrant, each showing the curve in grey and the
// edges carrying an arc of that quadrant's sign in black.
std::string patchwork_svg(const PlaneCurve& c, const PatchworkResult& r);

}  // namespace tropkit
