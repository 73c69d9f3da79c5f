#ifndef CONEPROJ_EXAMPLES_HPP
#define CONEPROJ_EXAMPLES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coneproj/operators.hpp"

namespace coneproj {

/// One of the six stock cone-pair constructions on which every non-(2,2,1/2)
/// member of the operator family fails to converge finitely despite a
/// nontrivial fixed set. Each carries the parameter region it covers, a
/// canonical parameter choice inside that region, a default start, and the
/// closed form of the n-th iterate.
struct ExampleSpec {
  int id = 0;
  ConePair pair;
  OperatorParams canonical_params;
  Vec2 default_start;
  std::string region_description;

  /// Region membership; inequality constraints (kappa*mu != 1 and the like)
  /// use an exclusion tolerance of 1e-12.
  bool in_region(const OperatorParams& p) const;

  /// The exact n-th iterate from `start`; closed_form(0) == start.
  Vec2 closed_form(const OperatorParams& p, Vec2 start, int n) const;

  /// Starts for which the closed form applies (e.g. x > 0, y > 0).
  bool valid_start(Vec2 start) const;

  /// A handful of parameter choices spread over the region, for tests.
  std::vector<OperatorParams> region_samples() const;
};

const std::array<ExampleSpec, 6>& stock_examples();
const ExampleSpec& example_by_id(int id);  // throws std::invalid_argument

/// Smallest example id whose region contains the parameters, or nullopt.
/// Only (2,2,1/2) — the finitely convergent member — is claimed by no
/// example.
std::optional<int> covering_example(const OperatorParams& p);

/// 21-point axes of the coverage grid: lambda, mu over (0,2], kappa over
/// (0,3]. Built so the grid hits the exceptional curve
/// (1/t, 1/t, t): (2,2,1/2), (1.25,1.25,0.8), (1,1,1), (0.8,0.8,1.25),
/// (0.5,0.5,2).
struct CoverageGrid {
  std::vector<double> lambdas;
  std::vector<double> mus;
  std::vector<double> kappas;
};
CoverageGrid coverage_grid();

struct ExampleRunReport {
  int id = 0;
  OperatorParams params;
  Vec2 start;
  int steps = 0;
  std::vector<Vec2> iterates;      // x_0 .. x_n
  double max_deviation = 0.0;      // against the closed form
  bool any_exactly_fixed = false;  // some iterate landed exactly on a fixed point
};

/// Iterates the example operator, comparing every iterate against the
/// closed form. Throws InternalConsistencyError when a deviation exceeds
/// 1e-10 or an iterate lands exactly in the fixed set (either would
/// falsify the construction).
ExampleRunReport run_example(int id, int n_steps,
                             const std::optional<OperatorParams>& params = std::nullopt,
                             const std::optional<Vec2>& start = std::nullopt);

}  // namespace coneproj

#endif  // CONEPROJ_EXAMPLES_HPP
