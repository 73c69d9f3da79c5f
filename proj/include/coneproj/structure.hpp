#ifndef CONEPROJ_STRUCTURE_HPP
#define CONEPROJ_STRUCTURE_HPP

#include <optional>
#include <stdexcept>

#include "coneproj/operators.hpp"

namespace coneproj {

/// A closed-form identity that must hold came out false; indicates an
/// implementation bug, never a user error.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The four cone configurations for which the Douglas-Rachford kernel is a
/// line L.
enum class KerLineCase {
  AZeroBLine,       // A = {0},   B = L
  ALinePerpBPlane,  // A = L^perp, B = R^2
  APlaneBLinePerp,  // A = R^2,   B = L^perp
  BZeroALine,       // B = {0},   A = L
};

const char* to_string(KerLineCase c);

struct StructureReport {
  PlanarCone kernel;
  PlanarCone fixed_set;
  bool fix_trivial = false;     // fixed_set == {0}
  bool kernel_is_line = false;
  std::optional<KerLineCase> kerline_case;
};

/// Ker T_DR = cone[(-B \cap A^polar) \cup (B^polar \cap A)]. The two
/// components are orthogonal, so the hull is always convex.
PlanarCone kernel_dr(const ConePair& pair);

/// Fix T_DR = (A \cap B) + (A - B)^polar.
PlanarCone fixed_set_dr(const ConePair& pair);

/// The cone A - B = A + (-B).
PlanarCone difference_cone(const ConePair& pair);

/// Kernel, fixed set and the derived flags. Checks, as a postcondition,
/// the equivalence  fix_trivial <=> (A cap B = {0} and A - B = R^2)  and
/// throws InternalConsistencyError if it fails.
StructureReport structure_report(const ConePair& pair);

}  // namespace coneproj

#endif  // CONEPROJ_STRUCTURE_HPP
