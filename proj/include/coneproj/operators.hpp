#ifndef CONEPROJ_OPERATORS_HPP
#define CONEPROJ_OPERATORS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "coneproj/cone.hpp"
#include "coneproj/geometry.hpp"

namespace coneproj {

/// Parameters (lambda, mu, kappa) of the generalized projection operator
///
///   T(x) = (1 - kappa) x + kappa * P_B^mu(P_A^lambda(x)),
///   P_C^rho = (1 - rho) Id + rho P_C,
///
/// with lambda, mu in (0, 2] and kappa > 0. kappa has no upper bound in
/// principle; the constructor caps it at 1e3 to keep iterates finite in
/// double precision.
struct OperatorParams {
  double lambda;
  double mu;
  double kappa;

  static constexpr double kKappaCap = 1e3;

  OperatorParams(double lambda_, double mu_, double kappa_);

  /// (2, 2, 1/2): the composition of two reflections averaged with the
  /// identity.
  static OperatorParams douglas_rachford() { return {2.0, 2.0, 0.5}; }
  /// (1, 1, 1): plain alternating projections P_B \circ P_A.
  static OperatorParams alternating_projections() { return {1.0, 1.0, 1.0}; }

  bool is_douglas_rachford(double tol = 1e-12) const;
};

/// Ordered pair of cones; the operator applies P_A first, then P_B.
struct ConePair {
  PlanarCone a;
  PlanarCone b;
};

/// Relaxed projection (1 - rho) x + rho P_C(x); rho must be in (0, 2].
/// rho = 1 is the projection, rho = 2 the reflection.
Vec2 relaxed_projection(const PlanarCone& c, double rho, Vec2 x);

/// The generalized operator of the family above, evaluated at x.
Vec2 generalized_op(const ConePair& pair, const OperatorParams& params, Vec2 x);

/// Douglas-Rachford step (x + R_B(R_A(x))) / 2, computed from reflections.
/// Coincides with generalized_op at (2, 2, 1/2); the tests check that, the
/// implementations stay independent.
Vec2 dr_op(const ConePair& pair, Vec2 x);

/// Relative fixed-point test: ||T(x) - x|| <= kFixTol * max(1, ||x||).
bool is_fixed(const ConePair& pair, const OperatorParams& params, Vec2 x);

enum class StopReason { ReachedFix, MaxIters };

struct Trajectory {
  std::vector<Vec2> points;           // x_0 .. x_N
  std::vector<double> step_distances; // ||x_{k+1} - x_k||, one per step
  std::optional<std::size_t> reached_fix_at;
  StopReason terminated_reason = StopReason::MaxIters;
};

/// Applies the operator from x0 until is_fixed passes or max_iters steps
/// were taken, recording every iterate.
Trajectory iterate(const ConePair& pair, const OperatorParams& params, Vec2 x0,
                   std::size_t max_iters);

}  // namespace coneproj

#endif  // CONEPROJ_OPERATORS_HPP
