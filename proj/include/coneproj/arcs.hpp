#ifndef CONEPROJ_ARCS_HPP
#define CONEPROJ_ARCS_HPP

#include <vector>

#include "coneproj/geometry.hpp"

namespace coneproj {

/// Closed circular arc [start, start + width]. Width 0 is a single
/// direction, width 2*pi the full circle.
struct Arc {
  Angle start;
  double width = 0.0;

  Angle end() const { return start + width; }
  bool full() const { return width >= kTwoPi - kAngleTol; }

  bool contains(Angle t, double tol = kAngleTol) const {
    if (full()) return true;
    double d = t.ccw_from(start);
    return d <= width + tol || d >= kTwoPi - tol;
  }
};

/// Disjoint union of closed arcs, kept sorted by start with adjacent arcs
/// merged. Total length never exceeds 2*pi.
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(std::vector<Arc> arcs) { for (const Arc& a : arcs) add(a); }

  static ArcSet full_circle() {
    ArcSet s;
    s.arcs_.push_back({Angle(0.0), kTwoPi});
    return s;
  }

  void add(const Arc& arc);

  bool empty() const { return arcs_.empty(); }
  bool is_full_circle() const { return arcs_.size() == 1 && arcs_.front().full(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool contains(Angle t, double tol = kAngleTol) const {
    for (const Arc& a : arcs_)
      if (a.contains(t, tol)) return true;
    return false;
  }

  double total_length() const {
    double s = 0.0;
    for (const Arc& a : arcs_) s += a.width;
    return s;
  }

  /// True when the two sets have the same arcs up to `tol` at endpoints.
  bool approx(const ArcSet& o, double tol = kAngleTol) const;

 private:
  std::vector<Arc> arcs_;
};

}  // namespace coneproj

#endif  // CONEPROJ_ARCS_HPP
