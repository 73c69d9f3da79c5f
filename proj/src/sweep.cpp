#include "coneproj/sweep.hpp"

#include <cstdio>

#include "coneproj/certificate.hpp"
#include "coneproj/structure.hpp"

namespace coneproj {

const char* to_string(SweepVerdict v) {
  return v == SweepVerdict::FiniteWithinBudget ? "FiniteWithinBudget"
                                               : "NotFiniteWithinBudget";
}

SweepRow sweep_point(const ConePair& pair, const OperatorParams& params, Vec2 start,
                     std::size_t budget) {
  SweepRow row{params.lambda, params.mu, params.kappa,
               SweepVerdict::NotFiniteWithinBudget, 0, 0.0};

  Vec2 x = start;
  Vec2 tx = generalized_op(pair, params, x);
  std::size_t steps = 0;
  while ((tx - x).norm() != 0.0 && steps < budget) {
    x = tx;
    tx = generalized_op(pair, params, x);
    ++steps;
  }
  row.steps_used = steps;
  if ((tx - x).norm() == 0.0) row.verdict = SweepVerdict::FiniteWithinBudget;

  if (params.is_douglas_rachford())
    row.final_distance_to_fix = (x - project(fixed_set_dr(pair), x)).norm();
  else
    row.final_distance_to_fix = (tx - x).norm();
  return row;
}

namespace {

std::vector<SweepRow> run_grid(const ConePair& pair, const SweepGrid& grid, Vec2 start,
                               std::size_t budget, bool parallel) {
  const std::ptrdiff_t nl = static_cast<std::ptrdiff_t>(grid.lambdas.size());
  const std::ptrdiff_t nm = static_cast<std::ptrdiff_t>(grid.mus.size());
  const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(grid.kappas.size());
  const std::ptrdiff_t total = nl * nm * nk;

  std::vector<SweepRow> rows(static_cast<std::size_t>(total));

#ifndef _OPENMP
  (void)parallel;
#else
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    std::ptrdiff_t il = idx / (nm * nk);
    std::ptrdiff_t im = (idx / nk) % nm;
    std::ptrdiff_t ik = idx % nk;
    OperatorParams p(grid.lambdas[static_cast<std::size_t>(il)],
                     grid.mus[static_cast<std::size_t>(im)],
                     grid.kappas[static_cast<std::size_t>(ik)]);
    rows[static_cast<std::size_t>(idx)] = sweep_point(pair, p, start, budget);
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ConePair& pair, const SweepGrid& grid, Vec2 start,
                                std::size_t budget) {
  return run_grid(pair, grid, start, budget, true);
}

std::vector<SweepRow> run_sweep_serial(const ConePair& pair, const SweepGrid& grid,
                                       Vec2 start, std::size_t budget) {
  return run_grid(pair, grid, start, budget, false);
}

std::size_t default_sweep_budget(const ConePair& pair, const SweepGrid& grid) {
  std::size_t budget = 1000;
  auto near = [](double a, double b) { return std::fabs(a - b) <= 1e-12; };
  bool has_dr = false;
  for (double l : grid.lambdas)
    for (double m : grid.mus)
      for (double k : grid.kappas)
        has_dr = has_dr || (near(l, 2.0) && near(m, 2.0) && near(k, 0.5));
  if (has_dr) {
    ConvergenceCertificate cert = certify(pair);
    if (cert.finite && cert.bound_n)
      budget = std::max<std::size_t>(budget, 2 * static_cast<std::size_t>(*cert.bound_n));
  }
  return budget;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "lambda,mu,kappa,verdict,steps_used,final_distance_to_fix\n";
  char buf[192];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s,%zu,%.17g\n", r.lambda, r.mu,
                  r.kappa, to_string(r.verdict), r.steps_used, r.final_distance_to_fix);
    out += buf;
  }
  return out;
}

}  // namespace coneproj
