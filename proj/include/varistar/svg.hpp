#pragma once

#include "varistar/regions.hpp"

#include <span>
#include <string>

namespace varistar {

struct LabeledDisc {
    std::string label;
    Disc disc;
    std::string stroke;
};

/// Static SVG 1.1 figure on an 800x800 viewBox: disc outlines plus sample
/// points, framed to the union of the discs' bounding boxes.
std::string render_svg(std::string_view title, std::span<const LabeledDisc> discs, std::span<const cplx> points);

} // namespace varistar
