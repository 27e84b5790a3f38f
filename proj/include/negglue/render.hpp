#pragma once

#include "negglue/model.hpp"

#include <string>
#include <vector>

namespace ng {

struct RenderStyle {
    enum ColorBy { TileHash, Gadget, StepOrder };
    int cell = 16;
    bool ticks = true;
    ColorBy colorBy = TileHash;
};

RenderStyle::ColorBy parse_color_by(const std::string& s);

// placements in attachment order; y grows upward in the picture
std::string render_svg(const TileSystem& S, const std::vector<Placement>& placements, const RenderStyle& style = {});

}  // namespace ng
