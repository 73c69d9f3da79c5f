// Times the parameter-sweep kernel: serial reference vs the OpenMP
// variant, on the alternating-projections example pair.
//
//   bench_sweep [grid-points-per-axis] [budget]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coneproj/examples.hpp"
#include "coneproj/sweep.hpp"

using namespace coneproj;

namespace {

double seconds(std::vector<SweepRow> (*fn)(const ConePair&, const SweepGrid&, Vec2,
                                           std::size_t),
               const ConePair& pair, const SweepGrid& grid, Vec2 start,
               std::size_t budget, std::size_t& checksum) {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = fn(pair, grid, start, budget);
  auto t1 = std::chrono::steady_clock::now();
  checksum = 0;
  for (const SweepRow& r : rows) checksum += r.steps_used;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 40;
  std::size_t budget = argc > 2 ? static_cast<std::size_t>(std::atoll(argv[2])) : 2000;

  SweepGrid grid;
  for (int i = 1; i <= n; ++i) {
    grid.lambdas.push_back(2.0 * i / n);
    grid.mus.push_back(2.0 * i / n);
    grid.kappas.push_back(2.0 * i / n);
  }
  const ConePair& pair = example_by_id(1).pair;
  Vec2 start{1.0, 1.0};

  std::size_t sum_serial = 0, sum_parallel = 0;
  double ts = seconds(run_sweep_serial, pair, grid, start, budget, sum_serial);
  double tp = seconds(run_sweep, pair, grid, start, budget, sum_parallel);

#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::printf("grid %dx%dx%d, budget %zu, %d threads\n", n, n, n, budget, threads);
  std::printf("serial   %.3fs (checksum %zu)\n", ts, sum_serial);
  std::printf("parallel %.3fs (checksum %zu)\n", tp, sum_parallel);
  std::printf("speedup  %.2fx\n", tp > 0.0 ? ts / tp : 0.0);
  if (sum_serial != sum_parallel) {
    std::fprintf(stderr, "checksum mismatch between serial and parallel kernels\n");
    return 1;
  }
  return 0;
}
