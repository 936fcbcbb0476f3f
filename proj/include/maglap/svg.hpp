// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "maglap/periodic.hpp"

namespace maglap {

struct SvgStyle {
    int width = 800;   ///< plot area, pixels
    int height = 600;
    int margin = 40;
    std::string band_color = "#808080";
    std::string background = "#ffffff";
    /// Top of the λ axis; defaults to the diagram's ambient_max.
    std::optional<double> lambda_max;
};

/// Band/gap picture: s ∈ [0, 2π) across, λ up. Each band interval of row j is a gray
/// rectangle filling column j. Output depends only on the inputs.
std::string render_svg(const FluxDiagram& diagram, const SvgStyle& style = {});

}  // namespace maglap
