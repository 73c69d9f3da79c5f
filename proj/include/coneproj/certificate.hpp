#ifndef CONEPROJ_CERTIFICATE_HPP
#define CONEPROJ_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "coneproj/circle_map.hpp"
#include "coneproj/structure.hpp"

namespace coneproj {

enum class Regime {
  KernelLine,              // kernel is a line: one step lands in Fix
  DichotomyFixNontrivial,  // kernel not a line, Fix != {0}: uniform bound
  DichotomyFixTrivial,     // Fix = {0}: no finite convergence off the kernel
  KernelPlane,             // T == 0: one step lands at the origin
};

const char* to_string(Regime r);

/// Finite-convergence verdict for the Douglas-Rachford operator on a cone
/// pair. When finite, bound_n is a uniform iteration bound valid for every
/// starting point.
struct ConvergenceCertificate {
  bool finite = false;
  std::optional<std::int64_t> bound_n;  // present iff finite
  std::optional<double> epsilon;        // absorbing-arc length, dichotomy regime only
  Regime regime = Regime::DichotomyFixTrivial;
  PlanarCone kernel;
  PlanarCone fixed_set;
  ArcSet fix_arcs;     // arg(Fix \ {0})
  ArcSet kernel_arcs;  // arg(Ker \ {0})
  PiecewiseCircleMap map;
  /// Set when a fixed-direction boundary abuts the domain boundary and that
  /// side was treated as absorbing. Not expected to occur; kept visible.
  bool domain_endpoint_absorbing = false;
};

/// Certifies the dichotomy: finite with an explicit uniform bound, or not
/// finite. The bound is 1 in the line-kernel and zero-operator regimes and
/// ceil(2*pi / epsilon) otherwise, where epsilon is the smallest absorbing
/// constant-piece arc adjacent to the fixed directions.
ConvergenceCertificate certify(const ConePair& pair);

/// Certificate as a JSON document:
///   {"finite", "bound_n", "epsilon", "regime", "kernel", "fixed_set",
///    "pieces": [{"arc_start", "arc_width", "kind", "angle", "scale",
///                "target"}]}
/// with cones rendered in the cone-expression grammar.
std::string certificate_to_json(const ConvergenceCertificate& cert, int indent = 2);

}  // namespace coneproj

#endif  // CONEPROJ_CERTIFICATE_HPP
