#include <doctest.h>

#include <sstream>

#include "coneproj/certificate.hpp"
#include "coneproj/sweep.hpp"
#include "test_util.hpp"

using namespace coneproj;
using namespace coneproj::testutil;

namespace {

ConePair example1_pair() {
  return {parse_cone("sector:0,0.75pi"), parse_cone("sector:0.5pi,0.5pi")};
}

}  // namespace

TEST_CASE("sweep verdicts separate exact landing from asymptotic decay") {
  ConePair pair = example1_pair();
  SweepGrid grid{{1.0, 2.0}, {1.0, 2.0}, {0.25, 0.5}};
  std::vector<SweepRow> rows = run_sweep(pair, grid, {1.0, 1.0}, 1000);
  REQUIRE(rows.size() == 8);

  auto row_for = [&](double l, double m, double k) -> const SweepRow& {
    for (const SweepRow& r : rows)
      if (r.lambda == l && r.mu == m && r.kappa == k) return r;
    FAIL("row not found");
    return rows.front();
  };

  // Alternating-style parameters with kappa < 1/2 only approach the fixed
  // set; the trajectory never lands on it within the budget.
  const SweepRow& slow = row_for(1.0, 1.0, 0.25);
  CHECK(slow.verdict == SweepVerdict::NotFiniteWithinBudget);
  CHECK(slow.steps_used == 1000);
  CHECK(slow.final_distance_to_fix > 0.0);
  CHECK(slow.final_distance_to_fix < 1e-100);  // honest geometric decay

  // The Douglas-Rachford member lands exactly.
  const SweepRow& dr = row_for(2.0, 2.0, 0.5);
  CHECK(dr.verdict == SweepVerdict::FiniteWithinBudget);
  CHECK(dr.steps_used <= 2);
  CHECK(dr.final_distance_to_fix == 0.0);

  for (const SweepRow& r : rows) CHECK(r.steps_used <= 1000);
}

TEST_CASE("the parallel kernel and the serial reference agree bit for bit") {
  ConePair pair = example1_pair();
  SweepGrid grid;
  for (int i = 1; i <= 12; ++i) {
    grid.lambdas.push_back(2.0 * i / 12);
    grid.mus.push_back(2.0 * i / 12);
    grid.kappas.push_back(1.5 * i / 12);
  }
  std::vector<SweepRow> par = run_sweep(pair, grid, {1.0, 1.0}, 400);
  std::vector<SweepRow> ser = run_sweep_serial(pair, grid, {1.0, 1.0}, 400);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].lambda == ser[i].lambda);
    CHECK(par[i].mu == ser[i].mu);
    CHECK(par[i].kappa == ser[i].kappa);
    CHECK(par[i].verdict == ser[i].verdict);
    CHECK(par[i].steps_used == ser[i].steps_used);
    CHECK(par[i].final_distance_to_fix == ser[i].final_distance_to_fix);
  }
}

TEST_CASE("rows come out in deterministic grid order, kappa innermost") {
  SweepGrid grid{{0.5, 1.0}, {0.7, 1.4}, {0.3, 0.6}};
  std::vector<SweepRow> rows = run_sweep(example1_pair(), grid, {1.0, 1.0}, 50);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].lambda == 0.5);
  CHECK(rows[0].mu == 0.7);
  CHECK(rows[0].kappa == 0.3);
  CHECK(rows[1].kappa == 0.6);
  CHECK(rows[2].mu == 1.4);
  CHECK(rows[4].lambda == 1.0);
}

TEST_CASE("empty grids give a header-only CSV") {
  std::vector<SweepRow> rows = run_sweep(example1_pair(), SweepGrid{}, {1.0, 1.0}, 10);
  CHECK(rows.empty());
  CHECK(sweep_to_csv(rows) == "lambda,mu,kappa,verdict,steps_used,final_distance_to_fix\n");
}

TEST_CASE("the default budget covers twice the certified bound") {
  ConePair pair = example1_pair();
  SweepGrid with_dr{{2.0}, {2.0}, {0.5}};
  ConvergenceCertificate cert = certify(pair);
  REQUIRE(cert.finite);
  std::size_t budget = default_sweep_budget(pair, with_dr);
  CHECK(budget >= 1000);
  CHECK(budget >= 2 * static_cast<std::size_t>(*cert.bound_n));

  SweepGrid without_dr{{1.0}, {1.0}, {0.25}};
  CHECK(default_sweep_budget(pair, without_dr) == 1000);
}

TEST_CASE("sweep CSV round-trips through a text stream") {
  SweepGrid grid{{2.0}, {2.0}, {0.5}};
  std::vector<SweepRow> rows = run_sweep(example1_pair(), grid, {1.0, 1.0}, 100);
  std::string csv = sweep_to_csv(rows);
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "lambda,mu,kappa,verdict,steps_used,final_distance_to_fix");
  REQUIRE(std::getline(in, line));
  CHECK(line.find("FiniteWithinBudget") != std::string::npos);
}
