#ifndef CONEPROJ_SWEEP_HPP
#define CONEPROJ_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coneproj/operators.hpp"

namespace coneproj {

enum class SweepVerdict { FiniteWithinBudget, NotFiniteWithinBudget };

const char* to_string(SweepVerdict v);

struct SweepRow {
  double lambda = 0.0, mu = 0.0, kappa = 0.0;
  SweepVerdict verdict = SweepVerdict::NotFiniteWithinBudget;
  std::size_t steps_used = 0;
  /// Distance of the final iterate to the fixed set: Euclidean distance to
  /// the analytic Douglas-Rachford fixed set when the parameters are
  /// (2,2,1/2), otherwise the fixed-point residual ||T(x) - x||.
  double final_distance_to_fix = 0.0;
};

struct SweepGrid {
  std::vector<double> lambdas;
  std::vector<double> mus;
  std::vector<double> kappas;

  std::size_t size() const { return lambdas.size() * mus.size() * kappas.size(); }
};

/// Evaluates one grid point: iterates from `start` up to `budget` steps and
/// reports whether the trajectory lands exactly on a fixed point. Exact
/// landing (zero residual) is the discriminator: finitely convergent
/// parameter choices land bit-exactly, while merely asymptotic ones keep a
/// shrinking nonzero residual.
SweepRow sweep_point(const ConePair& pair, const OperatorParams& params, Vec2 start,
                     std::size_t budget);

/// Runs the whole grid, lambda outermost, kappa innermost. Grid points are
/// independent; the OpenMP variant fills the row buffer in parallel and the
/// output order stays the deterministic grid order either way.
std::vector<SweepRow> run_sweep(const ConePair& pair, const SweepGrid& grid, Vec2 start,
                                std::size_t budget);

/// Serial reference implementation with identical output; kept for tests
/// and benchmarking against the parallel kernel.
std::vector<SweepRow> run_sweep_serial(const ConePair& pair, const SweepGrid& grid,
                                       Vec2 start, std::size_t budget);

/// Default budget: max(1000, 2 * certified bound) when the grid contains
/// the Douglas-Rachford point and the pair certifies finite, else 1000.
std::size_t default_sweep_budget(const ConePair& pair, const SweepGrid& grid);

/// CSV with header lambda,mu,kappa,verdict,steps_used,final_distance_to_fix.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace coneproj

#endif  // CONEPROJ_SWEEP_HPP
