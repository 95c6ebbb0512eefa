#pragma once

#include <string>

#include "lamina/lamination.hpp"

namespace lamina {

struct RenderStyle {
    enum class Geodesic { straight, hyperbolic } geodesic = Geodesic::straight;
    double stroke_width = 0.004;  // in disk units
    bool label_angles = false;
    int image_size = 512;         // pixels, at least 64
};

// Unit circle centred in the picture, angle a at (cos 2 pi a, sin 2 pi a).
// Coordinates carry 6 decimals so the output is byte-stable.
std::string render_svg(const Lamination& lam, const RenderStyle& style = {});

}  // namespace lamina
