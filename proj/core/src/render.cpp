#include "cylindric/render.hpp"

#include <algorithm>
#include <sstream>

namespace cylindric {

namespace {

constexpr int kColumn = 48;  // pixels per step
constexpr int kUnit = 12;    // pixels per unit of height
constexpr int kMargin = 24;

struct Frame {
  int low;
  int high;
  int px(std::size_t x) const { return kMargin + static_cast<int>(x) * kColumn; }
  int py(int y) const { return kMargin + (high - y) * kUnit; }
};

std::string point(const Frame& fr, std::size_t x, int y) {
  return std::to_string(fr.px(x)) + "," + std::to_string(fr.py(y));
}

}  // namespace

std::string render_svg(const PathFamily& f) {
  from_paths(f);  // throws on an invalid family
  const std::size_t T = f.period, m = f.paths.size();
  Frame fr{f.height(0, 0), f.height(m - 1, 0)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= T; ++k) {
      fr.low = std::min(fr.low, f.height(i, k) - 2);
      fr.high = std::max(fr.high, f.height(i, k) + 2);
    }
  const int width = 2 * kMargin + static_cast<int>(T) * kColumn;
  const int height = 2 * kMargin + (fr.high - fr.low) * kUnit;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>\n"
      << "  .up { fill: #e04040; stroke: #802020; }\n"
      << "  .down { fill: #4060e0; stroke: #203080; }\n"
      << "  .surface { fill: #f0d020; stroke: #806000; }\n"
      << "  .path { fill: none; stroke: #000; stroke-width: 2; }\n"
      << "  .seam { stroke: #888; stroke-dasharray: 4 4; }\n"
      << "  .occupied { fill: #000; }\n"
      << "  .vacant { fill: #fff; stroke: #000; }\n"
      << "</style>\n";

  // Column T is column 0 again.
  svg << "<line class=\"seam\" x1=\"" << fr.px(T) << "\" y1=\"0\" x2=\"" << fr.px(T) << "\" y2=\"" << height
      << "\"/>\n";

  svg << "<g class=\"tiles\">\n";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < T; ++k) {
      const int y = f.height(i, k);
      const bool up = f.paths[i].steps[k] == '1';
      const int y1 = y + (up ? 1 : -1);
      svg << "  <polygon class=\"" << (up ? "up" : "down") << "\" points=\"" << point(fr, k, y - 1) << ' '
          << point(fr, k + 1, y1 - 1) << ' ' << point(fr, k + 1, y1 + 1) << ' ' << point(fr, k, y + 1)
          << "\"/>\n";
    }
  for (std::size_t k = 0; k <= T; ++k) {
    const Profile rho = vertical_reading(f, k);
    const int base = f.height(0, k);
    for (std::size_t s = 0; s < rho.size(); ++s) {
      if (rho[s] == 1) continue;
      const int y = base + 2 * static_cast<int>(s);
      const int x = fr.px(k), half = kColumn / 4;
      svg << "  <polygon class=\"surface\" points=\"" << x - half << ',' << fr.py(y) << ' ' << x << ','
          << fr.py(y + 1) << ' ' << x + half << ',' << fr.py(y) << ' ' << x << ',' << fr.py(y - 1) << "\"/>\n";
    }
  }
  svg << "</g>\n<g class=\"paths\">\n";
  for (std::size_t i = 0; i < m; ++i) {
    svg << "  <polyline class=\"path\" points=\"";
    for (std::size_t k = 0; k <= T; ++k) svg << (k ? " " : "") << point(fr, k, f.height(i, k));
    svg << "\"/>\n";
  }
  svg << "</g>\n<g class=\"vertices\">\n";
  for (std::size_t k = 0; k <= T; ++k) {
    const Profile rho = vertical_reading(f, k);
    const int base = f.height(0, k);
    for (std::size_t s = 0; s <= rho.size(); ++s) {
      const bool occupied = s == rho.size() || rho[s] == 1;
      svg << "  <circle class=\"" << (occupied ? "occupied" : "vacant") << "\" cx=\"" << fr.px(k) << "\" cy=\""
          << fr.py(base + 2 * static_cast<int>(s)) << "\" r=\"3\"/>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace cylindric
