#include "coneproj/cone.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace coneproj {

const char* to_string(ConeKind k) {
  switch (k) {
    case ConeKind::Zero: return "zero";
    case ConeKind::Ray: return "ray";
    case ConeKind::Line: return "line";
    case ConeKind::Sector: return "sector";
    case ConeKind::Halfplane: return "halfplane";
    case ConeKind::Plane: return "plane";
  }
  return "?";
}

PlanarCone PlanarCone::line(Angle direction) {
  double d = direction.radians();
  if (d >= kPi) d -= kPi;  // canonical representative in [0, pi)
  return PlanarCone(ConeKind::Line, Angle(d), 0.0);
}

PlanarCone PlanarCone::sector(Angle start, double width) {
  if (!std::isfinite(width) || width <= 0.0)
    throw std::invalid_argument("sector width must be positive");
  if (width > kPi + kAngleTol)
    throw std::invalid_argument("sector width above pi is not convex");
  return from_support_arc(start, std::min(width, kPi));
}

PlanarCone PlanarCone::from_support_arc(Angle start, double width) {
  if (width >= kTwoPi - kAngleTol) return plane();
  if (width > kPi + kAngleTol)
    throw std::logic_error("support arc wider than pi is not a convex cone");
  if (width <= kAngleTol) return ray(start + width / 2.0);
  if (width >= kPi - kAngleTol) return halfplane(start);
  return PlanarCone(ConeKind::Sector, start, width);
}

ArcSet PlanarCone::support_arcs() const {
  ArcSet s;
  switch (kind_) {
    case ConeKind::Zero: break;
    case ConeKind::Ray: s.add({start_, 0.0}); break;
    case ConeKind::Line:
      s.add({start_, 0.0});
      s.add({start_ + kPi, 0.0});
      break;
    case ConeKind::Sector:
    case ConeKind::Halfplane: s.add({start_, width_}); break;
    case ConeKind::Plane: s.add({Angle(0.0), kTwoPi}); break;
  }
  return s;
}

bool PlanarCone::approx(const PlanarCone& o, double tol) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case ConeKind::Zero:
    case ConeKind::Plane: return true;
    case ConeKind::Ray: return start_.approx(o.start_, tol);
    case ConeKind::Line:
      return start_.approx(o.start_, tol) || start_.approx(o.start_ + kPi, tol);
    case ConeKind::Sector:
    case ConeKind::Halfplane:
      return start_.approx(o.start_, tol) && std::fabs(width_ - o.width_) <= tol;
  }
  return false;
}

bool contains(const PlanarCone& c, Vec2 x, double tol) {
  if (c.kind() == ConeKind::Plane) return true;
  if (x.is_zero()) return true;
  if (c.kind() == ConeKind::Zero) return false;

  // Coordinate-level tests: |cross(u, x)| is ||x|| times the sine of the
  // angular gap, so slack tol*||x|| realizes the angular tolerance without
  // the quantization of atan2 near the edges.
  double slack = tol * x.norm();
  switch (c.kind()) {
    case ConeKind::Ray: {
      Vec2 u = c.direction().unit();
      return std::fabs(cross(u, x)) <= slack && x.dot(u) >= -slack;
    }
    case ConeKind::Line: {
      Vec2 u = c.direction().unit();
      return std::fabs(cross(u, x)) <= slack;
    }
    case ConeKind::Halfplane:
      return cross(c.start().unit(), x) >= -slack;
    case ConeKind::Sector: {
      Vec2 us = c.start().unit();
      Vec2 ue = (c.start() + c.width()).unit();
      return cross(us, x) >= -slack && cross(ue, x) <= slack;
    }
    default: return false;
  }
}

namespace {

Vec2 project_onto_ray(Angle direction, Vec2 x) {
  Vec2 u = direction.unit();
  double t = x.dot(u);
  return t > 0.0 ? t * u : Vec2{0.0, 0.0};
}

}  // namespace

Vec2 project(const PlanarCone& c, Vec2 x) {
  if (c.kind() == ConeKind::Zero) return {0.0, 0.0};
  if (c.kind() == ConeKind::Plane || x.is_zero()) return x;

  // Closed-piece classification with exact comparisons: a point on the
  // closed cone projects to itself bitwise, a point on the closed polar
  // cone to the origin. Points that merely converge towards an edge keep
  // projecting through the formulas until their coordinates actually reach
  // it, and fixed points of the downstream operators stay exactly fixed
  // under iteration.
  switch (c.kind()) {
    case ConeKind::Line: {
      Vec2 u = c.direction().unit();
      if (cross(u, x) == 0.0) return x;
      return x.dot(u) * u;
    }
    case ConeKind::Ray: {
      Vec2 u = c.direction().unit();
      double d = x.dot(u);
      if (cross(u, x) == 0.0) return d >= 0.0 ? x : Vec2{0.0, 0.0};
      return project_onto_ray(c.direction(), x);
    }
    case ConeKind::Halfplane: {
      Vec2 us = c.start().unit();
      if (cross(us, x) >= 0.0) return x;
      if (x.dot(us) == 0.0) return {0.0, 0.0};  // on the polar ray
      Vec2 n = perp(us);                        // inward normal
      return x - x.dot(n) * n;
    }
    case ConeKind::Sector: {
      Vec2 us = c.start().unit();
      Vec2 ue = (c.start() + c.width()).unit();
      if (cross(us, x) >= 0.0 && cross(ue, x) <= 0.0) return x;
      // The polar cone is cut out by the two edge halfspaces.
      if (x.dot(us) <= 0.0 && x.dot(ue) <= 0.0) return {0.0, 0.0};
      Vec2 p1 = project_onto_ray(c.start(), x);
      Vec2 p2 = project_onto_ray(c.start() + c.width(), x);
      return (x - p2).norm2() <= (x - p1).norm2() ? p2 : p1;  // nearer edge ray
    }
    default: return x;
  }
}

Vec2 reflect(const PlanarCone& c, Vec2 x) { return 2.0 * project(c, x) - x; }

PlanarCone polar(const PlanarCone& c) {
  switch (c.kind()) {
    case ConeKind::Zero: return PlanarCone::plane();
    case ConeKind::Plane: return PlanarCone::zero();
    case ConeKind::Line: return PlanarCone::line(c.direction() + kHalfPi);
    case ConeKind::Ray: return PlanarCone::halfplane(c.direction() + kHalfPi);
    case ConeKind::Sector:
      return PlanarCone::from_support_arc(c.start() + c.width() + kHalfPi, kPi - c.width());
    case ConeKind::Halfplane: return PlanarCone::ray(c.start() + 3.0 * kHalfPi);
  }
  return PlanarCone::zero();
}

PlanarCone negate(const PlanarCone& c) {
  switch (c.kind()) {
    case ConeKind::Zero:
    case ConeKind::Plane:
    case ConeKind::Line: return c;
    case ConeKind::Ray: return PlanarCone::ray(c.direction() + kPi);
    case ConeKind::Sector: return PlanarCone::from_support_arc(c.start() + kPi, c.width());
    case ConeKind::Halfplane: return PlanarCone::halfplane(c.start() + kPi);
  }
  return c;
}

namespace {

bool arc_has(Angle start, double width, Angle t) {
  double d = t.ccw_from(start);
  return d <= width + kAngleTol || d >= kTwoPi - kAngleTol;
}

// Intersection of a line with a cone whose support is one arc.
PlanarCone intersect_line_arc(const PlanarCone& ln, const PlanarCone& other) {
  Angle d1 = ln.direction();
  Angle d2 = d1 + kPi;
  bool in1 = arc_has(other.start(), other.width(), d1);
  bool in2 = arc_has(other.start(), other.width(), d2);
  if (in1 && in2) return ln;
  if (in1) return PlanarCone::ray(d1);
  if (in2) return PlanarCone::ray(d2);
  return PlanarCone::zero();
}

struct Interval {
  double lo, hi;  // positions along the first cone's support, may be degenerate
  bool valid;
};

}  // namespace

PlanarCone intersect(const PlanarCone& a, const PlanarCone& b) {
  if (a.is_zero() || b.is_zero()) return PlanarCone::zero();
  if (a.kind() == ConeKind::Plane) return b;
  if (b.kind() == ConeKind::Plane) return a;

  if (a.kind() == ConeKind::Line && b.kind() == ConeKind::Line)
    return a.approx(b) ? a : PlanarCone::zero();
  if (a.kind() == ConeKind::Line) return intersect_line_arc(a, b);
  if (b.kind() == ConeKind::Line) return intersect_line_arc(b, a);

  // Both supports are single arcs [0, w1] and [delta, delta + w2] in the
  // coordinate anchored at a.start(). Two overlap components can only be a
  // pair of antipodal points (the cones then meet in a line).
  const double w1 = a.width(), w2 = b.width();
  const double delta = b.start().ccw_from(a.start());

  Interval first{std::max(0.0, delta), std::min(w1, delta + w2),
                 std::max(0.0, delta) <= std::min(w1, delta + w2) + kAngleTol};
  Interval wrapped{0.0, std::min(w1, delta + w2 - kTwoPi), delta + w2 - kTwoPi >= -kAngleTol};

  if (first.valid && wrapped.valid) {
    // Two antipodal point components; either one fixes the line.
    double p1 = (first.lo + std::max(first.lo, first.hi)) / 2.0;
    return PlanarCone::line(a.start() + p1);
  }
  for (const Interval& iv : {first, wrapped}) {
    if (!iv.valid) continue;
    double lo = iv.lo, hi = std::max(iv.lo, iv.hi);
    return PlanarCone::from_support_arc(a.start() + lo, hi - lo);
  }
  return PlanarCone::zero();
}

namespace {

// Hull of a line and a cone with a single support arc.
PlanarCone hull_line_arc(const PlanarCone& ln, const PlanarCone& other) {
  Angle d = ln.direction();
  double w = other.width();
  if (w <= kAngleTol) {
    // Line plus a ray: collinear stays a line, otherwise the halfplane
    // bounded by the line that holds the ray.
    Angle r = other.start() + w / 2.0;
    if (r.approx(d) || r.approx(d + kPi)) return ln;
    return r.ccw_from(d) < kPi ? PlanarCone::halfplane(d) : PlanarCone::halfplane(d + kPi);
  }
  double off1 = other.start().ccw_from(d);
  if (off1 <= kPi + kAngleTol && off1 + w <= kPi + kAngleTol) return PlanarCone::halfplane(d);
  double off2 = other.start().ccw_from(d + kPi);
  if (off2 <= kPi + kAngleTol && off2 + w <= kPi + kAngleTol)
    return PlanarCone::halfplane(d + kPi);
  return PlanarCone::plane();
}

}  // namespace

PlanarCone conic_hull_union(const PlanarCone& a, const PlanarCone& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kind() == ConeKind::Plane || b.kind() == ConeKind::Plane) return PlanarCone::plane();

  if (a.kind() == ConeKind::Line && b.kind() == ConeKind::Line)
    return a.approx(b) ? a : PlanarCone::plane();
  if (a.kind() == ConeKind::Line) return hull_line_arc(a, b);
  if (b.kind() == ConeKind::Line) return hull_line_arc(b, a);

  const double w1 = a.width(), w2 = b.width();
  const double d12 = b.start().ccw_from(a.start());
  const double d21 = a.start().ccw_from(b.start());

  // Two exactly opposite rays span a line, not a halfplane.
  if (w1 <= kAngleTol && w2 <= kAngleTol && std::fabs(d12 - kPi) <= kAngleTol)
    return PlanarCone::line(a.start());

  // Minimal covering arc is anchored at one of the two support starts.
  double len_a = std::max(w1, d12 + w2);
  double len_b = std::max(w2, d21 + w1);
  Angle anchor = len_a <= len_b ? a.start() : b.start();
  double len = std::min(len_a, len_b);

  if (len > kPi + kAngleTol) return PlanarCone::plane();
  return PlanarCone::from_support_arc(anchor, std::min(len, kPi));
}

PlanarCone minkowski_sum(const PlanarCone& a, const PlanarCone& b) {
  return conic_hull_union(a, b);
}

double parse_angle_expr(const std::string& token) {
  std::string body = token;
  double factor = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    factor = kPi;
    body.resize(body.size() - 2);
  }
  if (body.empty()) throw std::invalid_argument("invalid angle token '" + token + "'");
  const char* begin = body.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end != begin + body.size() || !std::isfinite(value))
    throw std::invalid_argument("invalid angle token '" + token + "'");
  return value * factor;
}

PlanarCone parse_cone(const std::string& expr) {
  if (expr == "zero") return PlanarCone::zero();
  if (expr == "plane") return PlanarCone::plane();

  auto colon = expr.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("invalid cone expression '" + expr + "'");
  std::string head = expr.substr(0, colon);
  std::string args = expr.substr(colon + 1);

  if (head == "ray") return PlanarCone::ray(Angle(parse_angle_expr(args)));
  if (head == "line") return PlanarCone::line(Angle(parse_angle_expr(args)));
  if (head == "halfplane") return PlanarCone::halfplane(Angle(parse_angle_expr(args)));
  if (head == "sector") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("sector needs '<start>,<width>', got '" + args + "'");
    Angle start(parse_angle_expr(args.substr(0, comma)));
    double width = parse_angle_expr(args.substr(comma + 1));
    return PlanarCone::sector(start, width);
  }
  throw std::invalid_argument("unknown cone kind '" + head + "'");
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_cone(const PlanarCone& c) {
  switch (c.kind()) {
    case ConeKind::Zero: return "zero";
    case ConeKind::Plane: return "plane";
    case ConeKind::Ray: return "ray:" + fmt(c.direction().radians());
    case ConeKind::Line: return "line:" + fmt(c.direction().radians());
    case ConeKind::Halfplane: return "halfplane:" + fmt(c.start().radians());
    case ConeKind::Sector:
      return "sector:" + fmt(c.start().radians()) + "," + fmt(c.width());
  }
  return "?";
}

}  // namespace coneproj
