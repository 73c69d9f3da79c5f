#include "coneproj/structure.hpp"

namespace coneproj {

const char* to_string(KerLineCase c) {
  switch (c) {
    case KerLineCase::AZeroBLine: return "A=0, B=L";
    case KerLineCase::ALinePerpBPlane: return "A=L_perp, B=plane";
    case KerLineCase::APlaneBLinePerp: return "A=plane, B=L_perp";
    case KerLineCase::BZeroALine: return "B=0, A=L";
  }
  return "?";
}

PlanarCone kernel_dr(const ConePair& pair) {
  PlanarCone first = intersect(negate(pair.b), polar(pair.a));
  PlanarCone second = intersect(polar(pair.b), pair.a);
  return conic_hull_union(first, second);
}

PlanarCone difference_cone(const ConePair& pair) {
  return minkowski_sum(pair.a, negate(pair.b));
}

PlanarCone fixed_set_dr(const ConePair& pair) {
  return minkowski_sum(intersect(pair.a, pair.b), polar(difference_cone(pair)));
}

namespace {

std::optional<KerLineCase> classify_kerline(const ConePair& pair) {
  ConeKind ka = pair.a.kind(), kb = pair.b.kind();
  if (ka == ConeKind::Zero && kb == ConeKind::Line) return KerLineCase::AZeroBLine;
  if (ka == ConeKind::Line && kb == ConeKind::Plane) return KerLineCase::ALinePerpBPlane;
  if (ka == ConeKind::Plane && kb == ConeKind::Line) return KerLineCase::APlaneBLinePerp;
  if (kb == ConeKind::Zero && ka == ConeKind::Line) return KerLineCase::BZeroALine;
  return std::nullopt;
}

}  // namespace

StructureReport structure_report(const ConePair& pair) {
  StructureReport report;
  report.kernel = kernel_dr(pair);
  report.fixed_set = fixed_set_dr(pair);
  report.fix_trivial = report.fixed_set.is_zero();
  report.kernel_is_line = report.kernel.kind() == ConeKind::Line;

  if (report.kernel_is_line) {
    report.kerline_case = classify_kerline(pair);
    if (!report.kerline_case)
      throw InternalConsistencyError(
          "kernel is a line but the pair matches none of the four line-kernel "
          "configurations");
  }

  // Fix triviality is equivalent to A cap B = {0} together with A - B = R^2.
  bool remark = intersect(pair.a, pair.b).is_zero() &&
                difference_cone(pair).kind() == ConeKind::Plane;
  if (remark != report.fix_trivial)
    throw InternalConsistencyError(
        "fixed-set triviality disagrees with the intersection/difference test");

  return report;
}

}  // namespace coneproj
