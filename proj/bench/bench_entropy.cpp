// Timing harness for the block-entropy scan and the sweep engine: the plain
// depth-first reference against the frontier-split OpenMP kernel.

#include <chrono>
#include <cstdio>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hqmm/catalog.hpp"
#include "hqmm/info.hpp"
#include "hqmm/rng.hpp"
#include "hqmm/sweep.hpp"

using namespace hqmm;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

Hmm dense_model(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  Hmm model;
  model.name = "dense";
  for (int i = 0; i < n; ++i) model.state_labels.push_back("s" + std::to_string(i));
  for (int r = 0; r < m; ++r) model.symbol_labels.push_back(std::to_string(r));
  model.transitions.assign(m, Matrix(n, n));
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    std::vector<double> row(static_cast<std::size_t>(m) * n);
    for (double& x : row) total += x = 0.05 + rng.uniform();
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < n; ++j)
        model.transitions[r](i, j) = row[static_cast<std::size_t>(r) * n + j] / total;
  }
  model.initial = stationary_distribution(model);
  model.stationary_initial = true;
  return model;
}

void bench_blocks(const char* label, const Hmm& model, int depth, std::size_t budget) {
  auto t0 = clock_type::now();
  const auto serial = block_entropies_serial(model, depth, LogBase::two, budget);
  const double t_serial = seconds_since(t0);

  t0 = clock_type::now();
  const auto parallel = block_entropies(model, depth, LogBase::two, budget);
  const double t_parallel = seconds_since(t0);

  double max_dev = 0.0;
  for (std::size_t l = 0; l < serial.size(); ++l)
    max_dev = std::max(max_dev, std::abs(serial[l] - parallel[l]));

  std::printf("%-28s depth %2d   serial %8.3f ms   parallel %8.3f ms   x%.2f   dev %.1e\n",
              label, depth, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
              max_dev);
}

void bench_sweep() {
  SweepSpec spec;
  spec.catalog_id = "rnc";
  spec.param = "p";
  spec.start = 0.0;
  spec.stop = 1.0;
  spec.step = 0.005;
  spec.fixed = {{"q", 0.7}};
  spec.columns = {"h_mu", "i_xy", "c_q", "c_q_diagonal", "e_curve_last"};
  spec.block_depth = 6;

  spec.jobs = 1;
  auto t0 = clock_type::now();
  const auto rows_serial = sweep_rows(spec);
  const double t_serial = seconds_since(t0);

  spec.jobs = 0;
#ifdef _OPENMP
  omp_set_num_threads(omp_get_num_procs());
#endif
  t0 = clock_type::now();
  const auto rows_parallel = sweep_rows(spec);
  const double t_parallel = seconds_since(t0);

  std::printf("%-28s %4zu rows  serial %8.3f ms   parallel %8.3f ms   x%.2f   %s\n",
              "sweep rnc q=0.7", rows_serial.size() - 1, 1e3 * t_serial,
              1e3 * t_parallel, t_serial / t_parallel,
              rows_serial == rows_parallel ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP with up to %d threads\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n\n");
#endif
  bench_blocks("dense n=6 m=3", dense_model(6, 3, 7), 13, std::size_t{1} << 22);
  bench_blocks("dense n=4 m=2", dense_model(4, 2, 9), 21, std::size_t{1} << 22);
  bench_blocks("rnc(0.5,0.7) sparse scan", catalog::rnc(0.5, 0.7), 24,
               std::size_t{1} << 24);
  bench_sweep();
  return 0;
}
