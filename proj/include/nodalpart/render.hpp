#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nodalpart/partition.hpp"

namespace nodalpart {

struct RenderStyle {
    int cell = 8;  // pixels per face side
    bool boundary_set = true;
    bool walls = true;
    bool surface_boundary = true;
    bool singular = true;
};

using Rgb = std::array<std::uint8_t, 3>;

// Fixed palette for the first ids, a hashed pastel beyond that.
Rgb domain_color(int id);

// The chart [0, W] x [0, H] with y pointing up: the image's top row is
// the face row j = H - 1. Both outputs are byte-identical for equal input.
std::string render_ppm(const Partition& p, const RenderStyle& style = {});
std::string render_svg(const Partition& p, const RenderStyle& style = {});

}  // namespace nodalpart
