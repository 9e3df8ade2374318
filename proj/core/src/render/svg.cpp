#include "coxlab/render/svg.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>

namespace coxlab::render {

std::string emit_svg(const Tiling2D& t, const SvgStyle& style) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& tile : t.tiles) {
    for (const auto& p : tile.chart) {
      min_x = std::min(min_x, p.x());
      max_x = std::max(max_x, p.x());
      min_y = std::min(min_y, p.y());
      max_y = std::max(max_y, p.y());
    }
  }
  if (t.tiles.empty()) min_x = min_y = max_x = max_y = 0.0;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale =
      (std::min(style.width, style.height) - 2.0 * style.margin) / span;
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  auto sx = [&](double x) { return 0.5 * style.width + (x - cx) * scale; };
  auto sy = [&](double y) { return 0.5 * style.height - (y - cy) * scale; };

  int max_len = 0;
  for (const auto& tile : t.tiles) max_len = std::max(max_len, tile.length());

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      style.width, style.height, style.width, style.height);
  out += "<defs>\n<style type=\"text/css\"><![CDATA[\n";
  out += fmt::format("path {{ stroke: {}; stroke-width: {}; stroke-linejoin: round; }}\n",
                     style.stroke, style.stroke_width);
  for (int l = 0; l <= max_len; ++l) {
    const std::string& fill =
        style.palette.empty() ? std::string("#cccccc") : style.palette[l % style.palette.size()];
    out += fmt::format(".d{} {{ fill: {}; }}\n", l, fill);
  }
  out += "]]></style>\n</defs>\n";
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                     style.width, style.height, style.background);
  out += "<g id=\"tiles\">\n";
  for (const auto& tile : t.tiles) {
    const auto& p = tile.chart;
    out += fmt::format(
        "<path class=\"d{}\" d=\"M {:.4f} {:.4f} L {:.4f} {:.4f} L {:.4f} {:.4f} Z\"/>\n",
        tile.length(), sx(p[0].x()), sy(p[0].y()), sx(p[1].x()), sy(p[1].y()), sx(p[2].x()),
        sy(p[2].y()));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace coxlab::render
