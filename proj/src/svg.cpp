#include "dyck/svg.hpp"

#include <algorithm>
#include <sstream>

namespace dyck {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 12;

}  // namespace

std::string render_pattern_svg(const Partition& lambda,
                               const DyckPattern& pattern) {
  int width = std::max(lambda.part(1), 1);
  int height = std::max(lambda.length(), 1);
  for (const Box& box : pattern.support()) {
    width = std::max(width, box.x);
    height = std::max(height, box.y);
  }
  ++width;
  ++height;

  const int canvas_w = 2 * kMargin + width * kCell;
  const int canvas_h = 2 * kMargin + height * kCell;
  const auto px = [&](int x) { return kMargin + x * kCell; };
  const auto py = [&](int y) { return kMargin + (height - y) * kCell; };
  const auto center_x = [&](int x) { return px(x) - kCell / 2; };
  const auto center_y = [&](int y) { return py(y) + kCell / 2; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_w
      << "\" height=\"" << canvas_h << "\" viewBox=\"0 0 " << canvas_w << ' '
      << canvas_h << "\">\n";
  out << "  <rect width=\"" << canvas_w << "\" height=\"" << canvas_h
      << "\" fill=\"white\"/>\n";

  out << "  <g stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"1,3\">\n";
  for (int x = 0; x <= width; ++x)
    out << "    <line x1=\"" << px(x) << "\" y1=\"" << py(height) << "\" x2=\""
        << px(x) << "\" y2=\"" << py(0) << "\"/>\n";
  for (int y = 0; y <= height; ++y)
    out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(width) << "\" y2=\"" << py(y) << "\"/>\n";
  out << "  </g>\n";

  if (!lambda.empty()) {
    out << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"3\" "
           "stroke-linejoin=\"round\" points=\"";
    out << px(0) << ',' << py(0);
    for (int y = 1; y <= lambda.length(); ++y) {
      out << ' ' << px(lambda.part(y)) << ',' << py(y - 1);
      out << ' ' << px(lambda.part(y)) << ',' << py(y);
    }
    out << ' ' << px(0) << ',' << py(lambda.length());
    out << "\"/>\n";
  }

  for (const DyckPath& path : pattern.paths()) {
    out << "  <polyline fill=\"none\" stroke=\"#c00\" stroke-width=\"4\" "
           "stroke-linecap=\"round\" stroke-linejoin=\"round\" points=\"";
    bool first = true;
    for (const Box& cell : path.cells()) {
      if (!first) out << ' ';
      out << center_x(cell.x) << ',' << center_y(cell.y);
      first = false;
    }
    if (path.length() == 1)
      out << ' ' << center_x(path.start().x) << ',' << center_y(path.start().y);
    out << "\"/>\n";
  }

  for (const Box& bullet : pattern.bullets())
    out << "  <circle cx=\"" << center_x(bullet.x) << "\" cy=\""
        << center_y(bullet.y) << "\" r=\"" << kCell * 18 / 100
        << "\" fill=\"#c00\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace dyck
