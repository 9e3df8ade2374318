#pragma once

#include <string>
#include <vector>

#include "coxlab/render/tiling.hpp"

namespace coxlab::render {

struct SvgStyle {
  int width = 800;
  int height = 800;
  double margin = 16.0;
  /// Fill colour for word length l is palette[l % palette.size()].
  std::vector<std::string> palette{"#f4d35e", "#ee964b", "#f95738", "#0d3b66", "#3c6e71",
                                   "#8ecae6", "#faf0ca"};
  std::string stroke = "#222222";
  double stroke_width = 0.6;
  std::string background = "#ffffff";
};

/// SVG 1.1 document with one <path> per tile, classed "d<length>". The output
/// depends only on the tiling and the style.
std::string emit_svg(const Tiling2D& t, const SvgStyle& style = {});

}  // namespace coxlab::render
