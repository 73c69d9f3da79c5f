#ifndef CONEPROJ_TRACE_IO_HPP
#define CONEPROJ_TRACE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "coneproj/operators.hpp"

namespace coneproj {

/// One output row of a trace: the iterate, the step that produced it, the
/// distance to the analytic fixed set (Douglas-Rachford parameters only)
/// and the relative fixed-point flag.
struct TraceRow {
  std::size_t iter = 0;
  Vec2 point;
  std::optional<double> step_norm;    // empty on the first row
  std::optional<double> dist_to_fix;  // empty unless params = (2,2,1/2)
  bool in_fix = false;
};

std::vector<TraceRow> make_trace(const ConePair& pair, const OperatorParams& params,
                                 const Trajectory& traj);

/// CSV with header iter,x,y,step_norm,dist_to_fix,in_fix; empty cells for
/// absent values, 17 significant digits so coordinates round-trip exactly.
std::string trace_to_csv(const std::vector<TraceRow>& rows);

/// JSON array mirroring the CSV columns (null for absent values).
std::string trace_to_json(const std::vector<TraceRow>& rows, int indent = 2);

/// Parses trace_to_csv output back; coordinates reproduce bit-exactly.
/// Throws std::invalid_argument naming the 1-based row of a malformed line.
std::vector<TraceRow> parse_trace_csv(const std::string& text);

/// Parses "x,y" into a point; rejects non-finite and malformed input.
Vec2 parse_point(const std::string& text);

}  // namespace coneproj

#endif  // CONEPROJ_TRACE_IO_HPP
