#include "coneproj/arcs.hpp"

#include <algorithm>
#include <cmath>

namespace coneproj {

void ArcSet::add(const Arc& arc) {
  double w = arc.width;
  if (w < 0.0) return;
  if (w >= kTwoPi - kAngleTol) {
    arcs_.assign(1, Arc{Angle(0.0), kTwoPi});
    return;
  }
  if (!arcs_.empty() && arcs_.front().full()) return;

  Arc cur{arc.start, w};
  // Absorb every arc that touches the new one, then re-insert.
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = arcs_.begin(); it != arcs_.end(); ++it) {
      double off = it->start.ccw_from(cur.start);
      bool other_starts_inside = off <= cur.width + kAngleTol;
      double back = cur.start.ccw_from(it->start);
      bool cur_starts_inside = back <= it->width + kAngleTol;
      if (!other_starts_inside && !cur_starts_inside) continue;

      Angle ns = cur_starts_inside ? it->start : cur.start;
      double end1 = cur.start.ccw_from(ns) + cur.width;
      double end2 = it->start.ccw_from(ns) + it->width;
      double nw = std::max(end1, end2);
      arcs_.erase(it);
      if (nw >= kTwoPi - kAngleTol) {
        arcs_.assign(1, Arc{Angle(0.0), kTwoPi});
        return;
      }
      cur = Arc{ns, nw};
      merged = true;
      break;
    }
  }
  arcs_.push_back(cur);
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.start.radians() < b.start.radians();
  });
}

bool ArcSet::approx(const ArcSet& o, double tol) const {
  if (arcs_.size() != o.arcs_.size()) return false;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (!arcs_[i].start.approx(o.arcs_[i].start, tol)) return false;
    if (std::fabs(arcs_[i].width - o.arcs_[i].width) > tol) return false;
  }
  return true;
}

}  // namespace coneproj
