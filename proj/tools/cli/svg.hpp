#pragma once

#include <string>

#include "trace_sharp/geometry.hpp"

namespace trace_sharp::cli {

// 800x800 rendering of the unit disk with the extremal set shaded.
// varphi = 0 draws the spherical-cap case (chord boundary); varphi > 0 also
// draws the removed ball.  The caption lines are annotated as <text>.
std::string render_extremal_svg(const geometry::HalfMoonParams& p,
                                const std::string& title,
                                const std::string& subtitle);

}  // namespace trace_sharp::cli
