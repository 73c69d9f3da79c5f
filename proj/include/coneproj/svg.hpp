#ifndef CONEPROJ_SVG_HPP
#define CONEPROJ_SVG_HPP

#include <optional>
#include <string>
#include <vector>

#include "coneproj/cone.hpp"
#include "coneproj/trace_io.hpp"

namespace coneproj {

/// Standalone SVG of a trajectory: the cones as shaded wedges clipped to
/// the viewport, the iterates as a polyline with circle markers. The
/// viewport is the trajectory bounding box padded by 10% on each side.
/// Throws std::invalid_argument for an empty trajectory.
std::string render_trajectory_svg(const std::vector<TraceRow>& rows,
                                  const std::optional<PlanarCone>& cone_a,
                                  const std::optional<PlanarCone>& cone_b);

}  // namespace coneproj

#endif  // CONEPROJ_SVG_HPP
