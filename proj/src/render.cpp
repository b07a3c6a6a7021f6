#include "hookwalk/render.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hookwalk {

namespace {

int px(int lattice) { return kSvgMargin + lattice * kSvgScale; }

void open_svg(std::ostringstream& out, int width_units, int height_units) {
  const int w = 2 * kSvgMargin + width_units * kSvgScale;
  const int h = 2 * kSvgMargin + height_units * kSvgScale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
}

void grid(std::ostringstream& out, int width_units, int height_units) {
  out << "<g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"1\" stroke-dasharray=\"2,4\">\n";
  for (int x = 0; x <= width_units; ++x)
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(0) << "\" x2=\"" << px(x) << "\" y2=\""
        << px(height_units) << "\"/>\n";
  for (int y = 0; y <= height_units; ++y)
    out << "<line x1=\"" << px(0) << "\" y1=\"" << px(y) << "\" x2=\"" << px(width_units)
        << "\" y2=\"" << px(y) << "\"/>\n";
  out << "</g>\n";
}

}  // namespace

std::string render_svg(const Vhc& v) {
  const Permutation& pi = v.perm();
  const int n = pi.size();
  // Value n sits on the top row; the grid spans 0..n+1 both ways.
  auto sx = [](int index) { return px(index); };
  auto sy = [n](int value) { return px(n + 1 - value); };

  std::ostringstream out;
  open_svg(out, n + 1, n + 1);
  grid(out, n + 1, n + 1);
  out << "<g class=\"hooks\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"3\">\n";
  for (const Hook& h : v.hooks()) {
    out << "<polyline class=\"hook\" points=\"" << sx(h.sw.index) << ',' << sy(h.sw.value) << ' '
        << sx(h.sw.index) << ',' << sy(h.ne.value) << ' ' << sx(h.ne.index) << ',' << sy(h.ne.value)
        << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g class=\"points\" fill=\"#000000\">\n";
  for (const Point& p : pi.points())
    out << "<circle class=\"point\" cx=\"" << sx(p.index) << "\" cy=\"" << sy(p.value)
        << "\" r=\"5\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_svg(const MotzkinPath& p) {
  const auto heights = p.heights();
  const int top = heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
  const int rows = std::max(top, 1);

  std::ostringstream out;
  open_svg(out, p.size(), rows);
  grid(out, p.size(), rows);
  out << "<polyline class=\"path\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" points=\""
      << px(0) << ',' << px(rows);
  for (int t = 0; t < p.size(); ++t) out << ' ' << px(t + 1) << ',' << px(rows - heights[t]);
  out << "\"/>\n</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << contents;
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace hookwalk
