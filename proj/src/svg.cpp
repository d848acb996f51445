#include "gridguard/svg.hpp"

#include <algorithm>
#include <fstream>

namespace gridguard {

namespace {

std::string coord(const Scalar& s) { return scalar_to_decimal(s, 6); }

std::string ring_path(const std::vector<Point>& ring) {
  std::string d;
  for (size_t i = 0; i < ring.size(); ++i) {
    d += (i == 0 ? "M " : "L ");
    d += coord(ring[i].x);
    d += ' ';
    d += coord(ring[i].y);
    d += ' ';
  }
  d += 'Z';
  return d;
}

std::string fill_for(size_t vl_size, size_t max_vl) {
  // light-to-saturated blue ramp over the visible-list size
  double t = max_vl <= 1 ? 1.0 : static_cast<double>(vl_size - 1) / static_cast<double>(max_vl - 1);
  int light = 92 - static_cast<int>(t * 42.0);
  return "hsl(210,70%," + std::to_string(light) + "%)";
}

}  // namespace

void render_svg(const SimplePolygon& P, const std::vector<ScRegion>& cells,
                const std::vector<GuardingRegion>& grs, const std::vector<Point>& guards,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open svg output '" + path + "'");

  Point lo, hi;
  P.bounding_box(lo, hi);
  double x0 = scalar_to_double(lo.x), y0 = scalar_to_double(lo.y);
  double x1 = scalar_to_double(hi.x), y1 = scalar_to_double(hi.y);
  double w = x1 - x0, h = y1 - y0;
  double pad = 0.05 * std::max(w, h) + 0.01;
  double stroke = std::max(w, h) / 400.0;
  double marker = std::max(w, h) / 80.0;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - pad << ' '
      << -(y1 + pad) << ' ' << w + 2 * pad << ' ' << h + 2 * pad << "\">\n";
  // flip y so the polygon renders in the usual orientation
  out << "<g transform=\"scale(1,-1)\">\n";

  size_t max_vl = 1;
  for (const auto& gr : grs) max_vl = std::max(max_vl, gr.vl().size());

  out << "<g stroke=\"none\">\n";
  for (const auto& gr : grs) {
    out << "<path d=\"" << ring_path(gr.region.vertices()) << "\" fill=\""
        << fill_for(gr.vl().size(), max_vl) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g fill=\"none\" stroke=\"#667\" stroke-width=\"" << stroke << "\">\n";
  for (const auto& cell : cells)
    out << "<path d=\"" << ring_path(cell.cell.vertices()) << "\"/>\n";
  out << "</g>\n";

  out << "<path d=\"" << ring_path(P.vertices()) << "\" fill=\"none\" stroke=\"#000\" stroke-width=\""
      << 2 * stroke << "\"/>\n";

  out << "<g fill=\"#c22\" stroke=\"#fff\" stroke-width=\"" << stroke << "\">\n";
  for (const auto& g : guards) {
    out << "<circle cx=\"" << coord(g.x) << "\" cy=\"" << coord(g.y) << "\" r=\"" << marker
        << "\"/>\n";
  }
  out << "</g>\n</g>\n</svg>\n";
  if (!out) throw IoError("failed writing svg output '" + path + "'");
}

}  // namespace gridguard
