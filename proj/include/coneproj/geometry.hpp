#ifndef CONEPROJ_GEOMETRY_HPP
#define CONEPROJ_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coneproj {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Angular tolerance used for membership queries and kind classification
/// at cone edges. Well above double-precision angle noise, far below any
/// geometry scale we care about.
inline constexpr double kAngleTol = 1e-9;

/// Relative tolerance of the fixed-point test.
inline constexpr double kFixTol = 1e-10;

/// Plane point. Public inputs and outputs must be finite.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {s * x, s * y}; }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
  bool is_zero() const { return x == 0.0 && y == 0.0; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// z-component of the cross product; positive when b lies counterclockwise
/// of a.
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Counterclockwise perpendicular, exact in floating point.
inline constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Maps any finite radian value into [0, 2*pi).
inline double normalize_radians(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2*pi
  return r;
}

/// Direction on the circle, always normalized to [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : radians_(normalize_radians(check(radians))) {}

  double radians() const { return radians_; }

  Angle operator+(double delta) const { return Angle(radians_ + delta); }
  Angle operator-(double delta) const { return Angle(radians_ - delta); }

  /// Counterclockwise offset from `from` to this angle, in [0, 2*pi).
  double ccw_from(Angle from) const { return normalize_radians(radians_ - from.radians_); }

  /// Shortest arc distance, in [0, pi].
  double distance_to(Angle o) const {
    double d = std::fabs(radians_ - o.radians_);
    return std::min(d, kTwoPi - d);
  }

  bool approx(Angle o, double tol = kAngleTol) const { return distance_to(o) <= tol; }

  /// Unit vector, with components snapped to exact 0 when within 1e-15.
  /// Cardinal directions (multiples of pi/2) then come out bit-exact, so
  /// axis-aligned cones project without parasitic rounding.
  Vec2 unit() const {
    double c = std::cos(radians_), s = std::sin(radians_);
    if (std::fabs(c) < 1e-15) c = 0.0;
    if (std::fabs(s) < 1e-15) s = 0.0;
    return {c, s};
  }

 private:
  static double check(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("angle must be finite");
    return t;
  }
  double radians_ = 0.0;
};

/// Direction of a nonzero vector as an angle in [0, 2*pi).
inline Angle arg_of(Vec2 v) {
  if (v.is_zero()) throw std::invalid_argument("arg of the zero vector is undefined");
  return Angle(std::atan2(v.y, v.x));
}

}  // namespace coneproj

#endif  // CONEPROJ_GEOMETRY_HPP
