#include "coneproj/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coneproj {

namespace {

void require_relaxation(double rho, const char* name) {
  if (!std::isfinite(rho) || rho <= 0.0 || rho > 2.0)
    throw std::invalid_argument(std::string(name) + " must lie in (0, 2], got " +
                                std::to_string(rho));
}

}  // namespace

OperatorParams::OperatorParams(double lambda_, double mu_, double kappa_)
    : lambda(lambda_), mu(mu_), kappa(kappa_) {
  require_relaxation(lambda, "lambda");
  require_relaxation(mu, "mu");
  if (!std::isfinite(kappa) || kappa <= 0.0)
    throw std::invalid_argument("kappa must be positive, got " + std::to_string(kappa));
  if (kappa > kKappaCap)
    throw std::invalid_argument("kappa above " + std::to_string(kKappaCap) +
                                " is not supported (overflow guard)");
}

bool OperatorParams::is_douglas_rachford(double tol) const {
  return std::fabs(lambda - 2.0) <= tol && std::fabs(mu - 2.0) <= tol &&
         std::fabs(kappa - 0.5) <= tol;
}

Vec2 relaxed_projection(const PlanarCone& c, double rho, Vec2 x) {
  require_relaxation(rho, "rho");
  return (1.0 - rho) * x + rho * project(c, x);
}

Vec2 generalized_op(const ConePair& pair, const OperatorParams& params, Vec2 x) {
  Vec2 inner = (1.0 - params.lambda) * x + params.lambda * project(pair.a, x);
  Vec2 outer = (1.0 - params.mu) * inner + params.mu * project(pair.b, inner);
  return (1.0 - params.kappa) * x + params.kappa * outer;
}

Vec2 dr_op(const ConePair& pair, Vec2 x) {
  return 0.5 * (x + reflect(pair.b, reflect(pair.a, x)));
}

bool is_fixed(const ConePair& pair, const OperatorParams& params, Vec2 x) {
  Vec2 tx = generalized_op(pair, params, x);
  return (tx - x).norm() <= kFixTol * std::max(1.0, x.norm());
}

Trajectory iterate(const ConePair& pair, const OperatorParams& params, Vec2 x0,
                   std::size_t max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  Trajectory traj;
  traj.points.push_back(x0);
  if (is_fixed(pair, params, x0)) {
    traj.reached_fix_at = 0;
    traj.terminated_reason = StopReason::ReachedFix;
    return traj;
  }
  for (std::size_t n = 0; n < max_iters; ++n) {
    Vec2 prev = traj.points.back();
    Vec2 next = generalized_op(pair, params, prev);
    traj.points.push_back(next);
    traj.step_distances.push_back((next - prev).norm());
    if (is_fixed(pair, params, next)) {
      traj.reached_fix_at = traj.points.size() - 1;
      traj.terminated_reason = StopReason::ReachedFix;
      return traj;
    }
  }
  traj.terminated_reason = StopReason::MaxIters;
  return traj;
}

}  // namespace coneproj
