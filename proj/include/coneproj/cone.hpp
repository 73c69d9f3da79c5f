#ifndef CONEPROJ_CONE_HPP
#define CONEPROJ_CONE_HPP

#include <string>

#include "coneproj/arcs.hpp"
#include "coneproj/geometry.hpp"

namespace coneproj {

enum class ConeKind { Zero, Ray, Line, Sector, Halfplane, Plane };

const char* to_string(ConeKind k);

/// Closed convex cone in the plane, stored in one of six mutually
/// exclusive canonical kinds:
///
///   Zero               the origin only
///   Ray(d)             { t*u(d) : t >= 0 }
///   Line(d)            the full line through u(d), d canonical in [0, pi)
///   Sector(s, w)       directions [s, s+w] with 0 < w < pi
///   Halfplane(s)       directions [s, s+pi]
///   Plane              all of R^2
///
/// A sector of width exactly pi is a Halfplane, width 0 a Ray; the
/// factories canonicalize so no two kinds overlap.
class PlanarCone {
 public:
  PlanarCone() = default;  // Zero

  static PlanarCone zero() { return PlanarCone(); }
  static PlanarCone plane() { return PlanarCone(ConeKind::Plane, Angle(0.0), kTwoPi); }
  static PlanarCone ray(Angle direction) { return PlanarCone(ConeKind::Ray, direction, 0.0); }
  static PlanarCone line(Angle direction);
  static PlanarCone halfplane(Angle start) { return PlanarCone(ConeKind::Halfplane, start, kPi); }

  /// Sector of directions [start, start + width]; requires 0 < width <= pi
  /// (width above pi is not convex). Width pi canonicalizes to Halfplane,
  /// width below the angular tolerance to Ray.
  static PlanarCone sector(Angle start, double width);

  /// Builds the cone spanning the closed arc [start, start + width] for any
  /// width in [0, pi] or the full circle; used by intersection/hull code.
  static PlanarCone from_support_arc(Angle start, double width);

  ConeKind kind() const { return kind_; }

  /// Ray/Line direction (Line canonical in [0, pi)).
  Angle direction() const { return start_; }
  /// First edge direction for Sector/Halfplane.
  Angle start() const { return start_; }
  /// Angular width of the support: 0 for Ray, pi for Halfplane, 2*pi for
  /// Plane. Meaningless for Zero and Line.
  double width() const { return width_; }

  bool is_zero() const { return kind_ == ConeKind::Zero; }

  /// Directions of the cone's nonzero points as a set of closed arcs;
  /// Line contributes two antipodal zero-width arcs.
  ArcSet support_arcs() const;

  bool approx(const PlanarCone& o, double tol = kAngleTol) const;

 private:
  PlanarCone(ConeKind k, Angle s, double w) : kind_(k), start_(s), width_(w) {}

  ConeKind kind_ = ConeKind::Zero;
  Angle start_;
  double width_ = 0.0;
};

/// Membership in the closed cone, with angular tolerance at the edges.
/// The origin belongs to every cone.
bool contains(const PlanarCone& c, Vec2 x, double tol = kAngleTol);

/// Nearest point of the cone. Piecewise: x on the cone, 0 on the polar
/// cone, otherwise the orthogonal projection onto the nearer edge ray.
Vec2 project(const PlanarCone& c, Vec2 x);

/// 2*project(c, x) - x. A piecewise isometry: identity on the cone, point
/// reflection through 0 on the polar cone, a line reflection in between.
Vec2 reflect(const PlanarCone& c, Vec2 x);

/// Polar cone { y : <x, y> <= 0 for all x in c }, in closed form.
PlanarCone polar(const PlanarCone& c);

/// The cone rotated by pi. Zero, Line and Plane are unchanged.
PlanarCone negate(const PlanarCone& c);

/// Intersection, canonicalized; Zero when the supports meet only at the
/// origin.
PlanarCone intersect(const PlanarCone& a, const PlanarCone& b);

/// Smallest closed convex cone containing both, by explicit case analysis
/// on the minimal covering arc of the two supports.
PlanarCone conic_hull_union(const PlanarCone& a, const PlanarCone& b);

/// Minkowski sum a + b. For convex cones containing the origin this equals
/// conic_hull_union; exposed separately so set formulas read naturally.
PlanarCone minkowski_sum(const PlanarCone& a, const PlanarCone& b);

/// Cone-expression grammar:
///   zero | plane | ray:<angle> | line:<angle> | halfplane:<angle>
///        | sector:<angle>,<angle>
/// where <angle> is a decimal radian value or "<decimal>pi" (e.g. 0.75pi).
/// The second sector angle is the width, required in (0, pi].
/// Throws std::invalid_argument naming the offending token.
PlanarCone parse_cone(const std::string& expr);

/// Parses a single <angle> token of the grammar above.
double parse_angle_expr(const std::string& token);

/// Round-trippable cone expression for the canonical cone.
std::string format_cone(const PlanarCone& c);

}  // namespace coneproj

#endif  // CONEPROJ_CONE_HPP
