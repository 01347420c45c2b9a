#pragma once

#include "hc/group_law.hpp"

#include <string>
#include <vector>

namespace hc {

struct SvgOptions {
    std::vector<Pt2> marks;                    ///< e.g. inflection retraction positions
    std::vector<std::array<Pt2, 2>> highlight; ///< e.g. fiber pieces
    std::string title;
};

/// Exact rational geometry scaled to an integer viewBox; byte-identical for identical input.
std::string render_curve_svg(const TropicalCubicCurve& c, const SvgOptions& opt = {});
/// The torus net in circle coordinates (h_U, h_V) on [0, Q]².
std::string render_torus_svg(const TGLComplex& C, const std::string& title = "");

} // namespace hc
