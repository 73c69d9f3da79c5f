#include "coneproj/circle_map.hpp"

#include <algorithm>
#include <cmath>

#include "coneproj/structure.hpp"

namespace coneproj {

const char* to_string(PieceKind k) {
  switch (k) {
    case PieceKind::Identity: return "identity";
    case PieceKind::Rotation: return "rotation";
    case PieceKind::ConstantTo: return "constant_to";
    case PieceKind::ToZero: return "to_zero";
  }
  return "?";
}

namespace {

// How the reflection R_C acts on one region of the circle.
struct ReflPiece {
  enum Kind { Identity, MinusId, LineRefl } kind = Identity;
  double axis = 0.0;  // LineRefl only
};

struct ReflRegion {
  Arc arc;
  ReflPiece piece;
};

// Partition of the circle into the regions where R_C is the identity, the
// point reflection through 0, or a reflection in one edge line. Boundaries
// sit at the edges of C and of its polar cone.
std::vector<ReflRegion> reflection_regions(const PlanarCone& c) {
  std::vector<ReflRegion> out;
  auto arc = [](double s, double w) { return Arc{Angle(s), w}; };
  switch (c.kind()) {
    case ConeKind::Plane:
      out.push_back({arc(0.0, kTwoPi), {ReflPiece::Identity, 0.0}});
      break;
    case ConeKind::Zero:
      out.push_back({arc(0.0, kTwoPi), {ReflPiece::MinusId, 0.0}});
      break;
    case ConeKind::Line: {
      double d = c.direction().radians();
      out.push_back({arc(0.0, kTwoPi), {ReflPiece::LineRefl, d}});
      break;
    }
    case ConeKind::Ray: {
      double d = c.direction().radians();
      out.push_back({arc(d - kHalfPi, kPi), {ReflPiece::LineRefl, d}});
      out.push_back({arc(d + kHalfPi, kPi), {ReflPiece::MinusId, 0.0}});
      break;
    }
    case ConeKind::Halfplane: {
      double s = c.start().radians();
      out.push_back({arc(s, kPi), {ReflPiece::Identity, 0.0}});
      out.push_back({arc(s + kPi, kPi), {ReflPiece::LineRefl, s}});
      break;
    }
    case ConeKind::Sector: {
      double s = c.start().radians(), w = c.width();
      out.push_back({arc(s, w), {ReflPiece::Identity, 0.0}});
      out.push_back({arc(s + w, kHalfPi), {ReflPiece::LineRefl, s + w}});
      out.push_back({arc(s + w + kHalfPi, kPi - w), {ReflPiece::MinusId, 0.0}});
      out.push_back({arc(s + 3.0 * kHalfPi, kHalfPi), {ReflPiece::LineRefl, s}});
      break;
    }
  }
  return out;
}

const ReflRegion& region_at(const std::vector<ReflRegion>& regions, Angle t) {
  for (const ReflRegion& r : regions)
    if (r.arc.contains(t)) return r;
  return regions.front();  // full cover; unreachable modulo rounding
}

Angle apply_on_circle(const ReflPiece& p, Angle t) {
  switch (p.kind) {
    case ReflPiece::Identity: return t;
    case ReflPiece::MinusId: return t + kPi;
    case ReflPiece::LineRefl: return Angle(2.0 * p.axis - t.radians());
  }
  return t;
}

Angle preimage_on_circle(const ReflPiece& p, Angle t) {
  switch (p.kind) {
    case ReflPiece::Identity: return t;
    case ReflPiece::MinusId: return t - kPi;
    case ReflPiece::LineRefl: return Angle(2.0 * p.axis - t.radians());  // involution
  }
  return t;
}

// Signed angle between two reflection axes, reduced to (-pi/2, pi/2].
double line_delta(double axis_from, double axis_to) {
  double d = normalize_radians(axis_to - axis_from);
  if (d >= kPi) d -= kPi;
  if (d > kHalfPi) d -= kPi;
  return d;
}

CirclePiece classify_arc(Arc arc, const std::vector<ReflRegion>& regions_a,
                         const std::vector<ReflRegion>& regions_b) {
  Angle mid = arc.start + arc.width / 2.0;
  const ReflPiece& ra = region_at(regions_a, mid).piece;
  const ReflPiece& rb = region_at(regions_b, apply_on_circle(ra, mid)).piece;

  CirclePiece piece;
  piece.arc = arc;

  bool a_id = ra.kind == ReflPiece::Identity, a_neg = ra.kind == ReflPiece::MinusId;
  bool b_id = rb.kind == ReflPiece::Identity, b_neg = rb.kind == ReflPiece::MinusId;

  if ((a_id && b_id) || (a_neg && b_neg)) {
    piece.kind = PieceKind::Identity;
    return piece;
  }
  if ((a_id && b_neg) || (a_neg && b_id)) {
    piece.kind = PieceKind::ToZero;
    return piece;
  }
  if (ra.kind == ReflPiece::LineRefl && rb.kind == ReflPiece::LineRefl) {
    // (Id + Rot(2d))/2 rotates by d and scales by cos d.
    double d = line_delta(ra.axis, rb.axis);
    if (std::fabs(d) <= kAngleTol) {
      piece.kind = PieceKind::Identity;
    } else if (std::fabs(std::fabs(d) - kHalfPi) <= kAngleTol) {
      piece.kind = PieceKind::ToZero;  // perpendicular axes annihilate
    } else {
      piece.kind = PieceKind::Rotation;
      piece.rotation = d;
      piece.scale = std::cos(d);
    }
    return piece;
  }

  // One reflection in a line, the other identity or -Id: the composite is
  // the orthogonal projection onto a line; the open arc maps to the
  // direction of that line it has positive inner product with.
  double line;
  if (ra.kind == ReflPiece::LineRefl)
    line = b_id ? ra.axis : ra.axis + kHalfPi;
  else
    line = a_id ? rb.axis : rb.axis + kHalfPi;
  double c = std::cos(mid.radians() - line);
  if (std::fabs(c) <= 1e-12)
    throw InternalConsistencyError(
        "projection piece vanishes at its midpoint; kernel split missing");
  piece.kind = PieceKind::ConstantTo;
  piece.target = c > 0.0 ? Angle(line) : Angle(line + kPi);
  return piece;
}

bool same_action(const CirclePiece& p, const CirclePiece& q) {
  if (p.kind != q.kind) return false;
  switch (p.kind) {
    case PieceKind::Identity:
    case PieceKind::ToZero: return true;
    case PieceKind::Rotation:
      return std::fabs(p.rotation - q.rotation) <= 1e-12 &&
             std::fabs(p.scale - q.scale) <= 1e-12;
    case PieceKind::ConstantTo: return p.target.approx(q.target);
  }
  return false;
}

ArcSet complement_of(const ArcSet& set) {
  if (set.empty()) return ArcSet::full_circle();
  if (set.is_full_circle()) return ArcSet();
  ArcSet out;
  const auto& arcs = set.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Angle gap_start = arcs[i].end();
    const Arc& next = arcs[(i + 1) % arcs.size()];
    double gap = next.start.ccw_from(gap_start);
    if (arcs.size() == 1 && gap <= kAngleTol) gap = kTwoPi - arcs[i].width;
    if (gap > kAngleTol) out.add({gap_start, gap});
  }
  return out;
}

}  // namespace

PiecewiseCircleMap build_circle_map(const ConePair& pair) {
  PiecewiseCircleMap map;
  PlanarCone kernel = kernel_dr(pair);
  map.kernel_arcs = kernel.support_arcs();
  map.domain = complement_of(map.kernel_arcs);

  auto regions_a = reflection_regions(pair.a);
  auto regions_b = reflection_regions(pair.b);

  std::vector<double> cuts;
  for (const ReflRegion& r : regions_a)
    if (!r.arc.full()) cuts.push_back(r.arc.start.radians());
  // B's boundaries pulled back through every reflection piece of A.
  for (const ReflRegion& rb : regions_b) {
    if (rb.arc.full()) continue;
    for (const ReflRegion& ra : regions_a) {
      Angle pre = preimage_on_circle(ra.piece, rb.arc.start);
      if (ra.arc.contains(pre)) cuts.push_back(pre.radians());
    }
  }
  // Kernel edges: projection pieces vanish there and must be split.
  for (const Arc& k : map.kernel_arcs.arcs()) {
    if (k.full()) continue;
    cuts.push_back(k.start.radians());
    cuts.push_back(k.end().radians());
  }

  for (double& c : cuts) c = normalize_radians(c);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> merged;
  for (double c : cuts)
    if (merged.empty() || c - merged.back() > kAngleTol) merged.push_back(c);
  if (merged.size() > 1 && (merged.front() + kTwoPi) - merged.back() <= kAngleTol)
    merged.pop_back();

  std::vector<CirclePiece> pieces;
  if (merged.empty()) {
    pieces.push_back(classify_arc({Angle(0.0), kTwoPi}, regions_a, regions_b));
  } else {
    for (std::size_t i = 0; i < merged.size(); ++i) {
      double s = merged[i];
      double e = i + 1 < merged.size() ? merged[i + 1] : merged.front() + kTwoPi;
      if (e - s <= kAngleTol) continue;
      pieces.push_back(classify_arc({Angle(s), e - s}, regions_a, regions_b));
    }
  }

  // Canonicalize: fuse neighbors that perform the same action, including
  // across the wrap-around.
  std::vector<CirclePiece> fused;
  for (const CirclePiece& p : pieces) {
    if (!fused.empty() && same_action(fused.back(), p) &&
        fused.back().arc.end().approx(p.arc.start)) {
      fused.back().arc.width += p.arc.width;
    } else {
      fused.push_back(p);
    }
  }
  if (fused.size() > 1 && same_action(fused.front(), fused.back()) &&
      fused.back().arc.end().approx(fused.front().arc.start)) {
    fused.front().arc.start = fused.back().arc.start;
    fused.front().arc.width += fused.back().arc.width;
    fused.pop_back();
  }
  map.pieces = std::move(fused);
  return map;
}

std::optional<Angle> eval_circle_map(const PiecewiseCircleMap& map, Angle t) {
  if (map.kernel_arcs.contains(t)) return std::nullopt;
  for (const CirclePiece& p : map.pieces) {
    if (!p.arc.contains(t)) continue;
    switch (p.kind) {
      case PieceKind::Identity: return t;
      case PieceKind::Rotation: return t + p.rotation;
      case PieceKind::ConstantTo: return p.target;
      case PieceKind::ToZero: return std::nullopt;
    }
  }
  return std::nullopt;  // unreachable: pieces cover the circle
}

ArcSet fixed_arcs(const PiecewiseCircleMap& map) {
  ArcSet out;
  for (const CirclePiece& p : map.pieces) {
    if (p.kind == PieceKind::Identity) out.add(p.arc);
    else if (p.kind == PieceKind::ConstantTo && p.arc.contains(p.target))
      out.add({p.target, 0.0});
  }
  return out;
}

}  // namespace coneproj
