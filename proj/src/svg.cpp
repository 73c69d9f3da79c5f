#include "coneproj/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace coneproj {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string pt(Vec2 p) { return num(p.x) + "," + num(p.y); }

// Wedge (or stripe) covering the cone out to radius r, as an SVG path.
std::string cone_path(const PlanarCone& c, double r, const char* fill) {
  std::string d;
  switch (c.kind()) {
    case ConeKind::Zero:
      return "";
    case ConeKind::Plane: {
      d = "M " + pt({-r, -r}) + " L " + pt({r, -r}) + " L " + pt({r, r}) + " L " +
          pt({-r, r}) + " Z";
      break;
    }
    case ConeKind::Ray: {
      Vec2 u = c.direction().unit();
      return "<line x1=\"0\" y1=\"0\" x2=\"" + num(r * u.x) + "\" y2=\"" + num(r * u.y) +
             "\" stroke=\"" + fill + "\" stroke-width=\"0.6%\" />\n";
    }
    case ConeKind::Line: {
      Vec2 u = c.direction().unit();
      return "<line x1=\"" + num(-r * u.x) + "\" y1=\"" + num(-r * u.y) + "\" x2=\"" +
             num(r * u.x) + "\" y2=\"" + num(r * u.y) + "\" stroke=\"" + fill +
             "\" stroke-width=\"0.6%\" />\n";
    }
    case ConeKind::Sector:
    case ConeKind::Halfplane: {
      Vec2 e1 = r * c.start().unit();
      Vec2 e2 = r * (c.start() + c.width()).unit();
      int large = c.width() > kPi ? 1 : 0;
      d = "M 0,0 L " + pt(e1) + " A " + num(r) + " " + num(r) + " 0 " +
          std::to_string(large) + " 1 " + pt(e2) + " Z";
      break;
    }
  }
  return "<path d=\"" + d + "\" fill=\"" + fill + "\" fill-opacity=\"0.25\" stroke=\"none\" />\n";
}

}  // namespace

std::string render_trajectory_svg(const std::vector<TraceRow>& rows,
                                  const std::optional<PlanarCone>& cone_a,
                                  const std::optional<PlanarCone>& cone_b) {
  if (rows.empty()) throw std::invalid_argument("cannot render an empty trajectory");

  double min_x = rows[0].point.x, max_x = min_x;
  double min_y = rows[0].point.y, max_y = min_y;
  for (const TraceRow& r : rows) {
    min_x = std::min(min_x, r.point.x);
    max_x = std::max(max_x, r.point.x);
    min_y = std::min(min_y, r.point.y);
    max_y = std::max(max_y, r.point.y);
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
  double pad = 0.1 * span;
  double vx = min_x - pad, vy = min_y - pad;
  double vw = (max_x - min_x) + 2 * pad, vh = (max_y - min_y) + 2 * pad;
  // Radius large enough that cone wedges always leave the viewport.
  double r = 2.0 * (std::hypot(vw, vh) + std::hypot(vx, vy));

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vx) + " " +
         num(-(vy + vh)) + " " + num(vw) + " " + num(vh) + "\">\n";
  // Flip the y axis so mathematical coordinates read upward.
  svg += "<g transform=\"scale(1,-1)\">\n";
  if (cone_a) svg += cone_path(*cone_a, r, "#4878cf");
  if (cone_b) svg += cone_path(*cone_b, r, "#d65f5f");

  svg += "<polyline fill=\"none\" stroke=\"#333333\" stroke-width=\"0.4%\" points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) svg += ' ';
    svg += pt(rows[i].point);
  }
  svg += "\" />\n";

  double marker = 0.012 * span;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const char* color = i + 1 == rows.size() ? "#2ca02c" : "#333333";
    svg += "<circle class=\"iterate\" cx=\"" + num(rows[i].point.x) + "\" cy=\"" +
           num(rows[i].point.y) + "\" r=\"" + num(marker) + "\" fill=\"" + color + "\" />\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace coneproj
