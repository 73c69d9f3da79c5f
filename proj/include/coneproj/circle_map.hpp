#ifndef CONEPROJ_CIRCLE_MAP_HPP
#define CONEPROJ_CIRCLE_MAP_HPP

#include <optional>
#include <vector>

#include "coneproj/arcs.hpp"
#include "coneproj/operators.hpp"

namespace coneproj {

enum class PieceKind {
  Identity,    // t -> t
  Rotation,    // t -> t + angle, point norm scaled by |cos angle|
  ConstantTo,  // whole arc maps to one direction (projection onto a line)
  ToZero,      // arc lies in the kernel
};

const char* to_string(PieceKind k);

/// One linear piece of the Douglas-Rachford operator, seen on the circle.
struct CirclePiece {
  Arc arc;              // closed, positive width
  PieceKind kind = PieceKind::Identity;
  double rotation = 0.0;  // Rotation only; signed, in (-pi/2, pi/2)
  double scale = 1.0;     // Rotation only; equals |cos(rotation)|
  Angle target;           // ConstantTo only
};

/// Piecewise description of the circle map t -> arg(T_DR([t])). The pieces
/// cover the whole circle; the map itself is defined on the complement of
/// the kernel directions.
struct PiecewiseCircleMap {
  std::vector<CirclePiece> pieces;  // cyclic order, cover the circle
  ArcSet domain;                    // closure of arg(R^2 \ Ker)
  ArcSet kernel_arcs;               // arg(Ker), possibly zero-width arcs
};

/// Builds the piecewise circle map of the Douglas-Rachford operator for an
/// ordered cone pair. Breakpoints come from the projection regions of A,
/// the regions of B pulled back through each reflection piece of A, and
/// the kernel edges.
PiecewiseCircleMap build_circle_map(const ConePair& pair);

/// Applies the piece containing t. Returns nullopt (the to-zero signal)
/// for kernel directions.
std::optional<Angle> eval_circle_map(const PiecewiseCircleMap& map, Angle t);

/// Fixed directions of the circle map: all identity arcs plus isolated
/// constant-piece targets that land inside their own arc.
ArcSet fixed_arcs(const PiecewiseCircleMap& map);

}  // namespace coneproj

#endif  // CONEPROJ_CIRCLE_MAP_HPP
