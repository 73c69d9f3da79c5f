#include "coneproj/examples.hpp"

#include <cmath>
#include <stdexcept>

#include "coneproj/structure.hpp"

namespace coneproj {

namespace {

constexpr double kExclTol = 1e-12;  // tolerance of the != constraints

bool near(double a, double b) { return std::fabs(a - b) <= kExclTol; }

// The exceptional curve (1/t, 1/t, t): both products kappa*mu and
// kappa*lambda equal 1.
bool on_curve(const OperatorParams& p) {
  return near(p.kappa * p.mu, 1.0) && near(p.kappa * p.lambda, 1.0);
}

double geometric_x(double ratio, double x0, int n) {
  return std::pow(ratio, n) * x0;
}

}  // namespace

bool ExampleSpec::in_region(const OperatorParams& p) const {
  switch (id) {
    case 1: return p.kappa < 0.5 - kExclTol;
    case 2: return p.kappa >= 0.5 - kExclTol && !near(p.kappa * p.mu, 1.0);
    case 3: return p.kappa >= 0.5 - kExclTol && !near(p.kappa * p.lambda, 1.0);
    case 4: return on_curve(p) && p.kappa > 0.5 + kExclTol && p.kappa < 1.0 - kExclTol;
    case 5: return on_curve(p) && p.kappa > 1.0 + kExclTol;
    case 6: return near(p.lambda, 1.0) && near(p.mu, 1.0) && near(p.kappa, 1.0);
  }
  return false;
}

Vec2 ExampleSpec::closed_form(const OperatorParams& p, Vec2 start, int n) const {
  if (n == 0) return start;
  switch (id) {
    case 1:
    case 2: return {geometric_x(1.0 - p.kappa * p.mu, start.x, n), start.y};
    case 3: return {geometric_x(1.0 - p.kappa * p.lambda, start.x, n), start.y};
    case 4:
    case 5: return {geometric_x(1.0 / p.kappa - 1.0, start.x, n), start.y};
    case 6: return {(start.x + start.y) / std::pow(2.0, n), 0.0};
  }
  return start;
}

bool ExampleSpec::valid_start(Vec2 s) const {
  if (!s.finite()) return false;
  switch (id) {
    case 1:
    case 4:
    case 5: return s.x > 0.0 && s.y > 0.0;
    case 2:
    case 3: return s.x != 0.0 && s.y > 0.0;
    case 6: return s.x > s.y && s.y > 0.0;  // strictly between the boundary rays
  }
  return false;
}

std::vector<OperatorParams> ExampleSpec::region_samples() const {
  auto curve = [](double t) { return OperatorParams(1.0 / t, 1.0 / t, t); };
  switch (id) {
    case 1:
      return {{0.5, 0.5, 0.25}, {1.0, 1.0, 0.1}, {2.0, 0.6, 0.25},
              {1.5, 0.7, 0.3},  {0.3, 1.9, 0.05}};
    case 2:
      return {{1.0, 1.0, 2.0}, {1.0, 2.0, 1.0}, {0.5, 0.3, 1.0},
              {1.0, 1.5, 1.0}, {2.0, 0.25, 1.2}};
    case 3:
      return {{1.0, 1.0, 2.0}, {2.0, 1.0, 1.0}, {0.3, 0.5, 1.0},
              {1.5, 1.0, 1.0}, {0.25, 2.0, 1.2}};
    case 4: return {curve(0.52), curve(0.55), curve(0.57), curve(0.58), curve(0.6)};
    case 5: return {curve(3.0), curve(3.5), curve(4.0), curve(5.0), curve(8.0)};
    case 6: {
      OperatorParams ap = OperatorParams::alternating_projections();
      return {ap, ap, ap, ap, ap};  // the region is a single point
    }
  }
  return {};
}

const std::array<ExampleSpec, 6>& stock_examples() {
  static const std::array<ExampleSpec, 6> examples = [] {
    auto ray = [](double d) { return PlanarCone::ray(Angle(d)); };
    auto line = [](double d) { return PlanarCone::line(Angle(d)); };
    auto half = [](double s) { return PlanarCone::halfplane(Angle(s)); };
    auto sect = [](double s, double w) { return PlanarCone::sector(Angle(s), w); };

    std::array<ExampleSpec, 6> ex = {{
        {1, {sect(0.0, 0.75 * kPi), sect(kHalfPi, kHalfPi)},
         OperatorParams(1.0, 1.0, 0.25), {1.0, 1.0},
         "lambda, mu in (0,2], kappa in (0, 1/2)"},
        {2, {half(0.0), ray(kHalfPi)},
         OperatorParams(1.0, 0.5, 1.0), {1.0, 1.0},
         "lambda, mu in (0,2], kappa >= 1/2, kappa*mu != 1"},
        {3, {ray(kHalfPi), half(0.0)},
         OperatorParams(0.5, 1.0, 1.0), {1.0, 1.0},
         "lambda, mu in (0,2], kappa >= 1/2, kappa*lambda != 1"},
        {4, {half(kHalfPi), half(3.0 * kHalfPi)},
         OperatorParams(4.0 / 3.0, 4.0 / 3.0, 0.75), {1.0, 1.0},
         "(lambda, mu, kappa) = (1/t, 1/t, t), 1/2 < t < 1"},
        {5, {ray(kHalfPi), line(kHalfPi)},
         OperatorParams(0.5, 0.5, 2.0), {1.0, 1.0},
         "(lambda, mu, kappa) = (1/t, 1/t, t), t > 1"},
        {6, {half(0.25 * kPi), half(kPi)},
         OperatorParams::alternating_projections(), {2.0, 1.0},
         "(lambda, mu, kappa) = (1, 1, 1)"},
    }};
    return ex;
  }();
  return examples;
}

const ExampleSpec& example_by_id(int id) {
  if (id < 1 || id > 6)
    throw std::invalid_argument("example id must be in 1..6, got " + std::to_string(id));
  return stock_examples()[static_cast<std::size_t>(id - 1)];
}

std::optional<int> covering_example(const OperatorParams& p) {
  for (const ExampleSpec& ex : stock_examples())
    if (ex.in_region(p)) return ex.id;
  return std::nullopt;
}

CoverageGrid coverage_grid() {
  CoverageGrid grid;
  for (int i = 1; i <= 20; ++i) grid.lambdas.push_back(0.1 * i);
  grid.lambdas.insert(grid.lambdas.begin() + 12, 1.25);  // hits the curve at t = 0.8
  grid.mus = grid.lambdas;
  grid.kappas = {0.1, 0.25, 0.4, 0.5, 0.6,  0.7, 0.8, 0.9, 1.0, 1.1, 1.25,
                 1.4, 1.55, 1.7, 1.85, 2.0, 2.2, 2.4, 2.6, 2.8, 3.0};
  return grid;
}

ExampleRunReport run_example(int id, int n_steps, const std::optional<OperatorParams>& params,
                             const std::optional<Vec2>& start) {
  const ExampleSpec& ex = example_by_id(id);
  if (n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");

  OperatorParams p = params.value_or(ex.canonical_params);
  if (!ex.in_region(p))
    throw std::invalid_argument("parameters are outside the example " + std::to_string(id) +
                                " region (" + ex.region_description + ")");
  Vec2 x0 = start.value_or(ex.default_start);
  if (!ex.valid_start(x0))
    throw std::invalid_argument("start point is outside the region covered by example " +
                                std::to_string(id));

  ExampleRunReport report{id, p, x0, n_steps, {}, 0.0, false};
  report.iterates.reserve(static_cast<std::size_t>(n_steps) + 1);
  report.iterates.push_back(x0);

  Vec2 x = x0;
  for (int n = 0; n <= n_steps; ++n) {
    Vec2 expected = ex.closed_form(p, x0, n);
    report.max_deviation = std::max(report.max_deviation, (x - expected).norm());
    // The construction promises the exact iterate never lands on a fixed
    // point; an exact landing means the floating-point trajectory left the
    // regime the closed form describes.
    Vec2 tx = generalized_op(ex.pair, p, x);
    if ((tx - x).norm() == 0.0) report.any_exactly_fixed = true;
    if (n < n_steps) {
      x = tx;
      report.iterates.push_back(x);
    }
  }

  if (report.max_deviation > 1e-10)
    throw InternalConsistencyError("example " + std::to_string(id) +
                                   " deviates from its closed form by " +
                                   std::to_string(report.max_deviation));
  if (report.any_exactly_fixed)
    throw InternalConsistencyError("example " + std::to_string(id) +
                                   " iterate landed in the fixed set");
  return report;
}

}  // namespace coneproj
