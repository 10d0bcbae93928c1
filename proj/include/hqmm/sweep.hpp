#pragma once

#include <map>
#include <string>
#include <vector>

#include "hqmm/common.hpp"

namespace hqmm {

// One-parameter grid over a catalog model, one CSV row per grid point.
// Supported columns: h_mu, i_xy, c_q, c_q_diagonal, e_curve_last, case_label,
// and the perturbed-coin extras i_markov, i_3state, c_q_markov, c_q_3state,
// c_cl_lower_bound, c_eps (these need an `eps` parameter in scope).
struct SweepSpec {
  std::string catalog_id;
  std::string param;
  double start = 0.0, stop = 0.0, step = 1.0;
  std::map<std::string, double> fixed;
  std::vector<std::string> columns;
  std::string out_path;
  bool force = false;
  int jobs = 0;  // 0: library default
  LogBase base = LogBase::two;
  int block_depth = 8;
};

const std::vector<std::string>& sweep_column_names();

// Throws std::invalid_argument on a malformed spec (bad step, empty columns,
// unknown column, missing eps for the perturbed-coin extras).
void check_sweep_spec(const SweepSpec& spec);

std::vector<double> sweep_grid(const SweepSpec& spec);

// Header line plus one line per grid point, in grid order (rows are computed
// in parallel but emitted by index). Lines have no trailing newline.
std::vector<std::string> sweep_rows(const SweepSpec& spec);

// Writes rows to spec.out_path; refuses to overwrite unless spec.force.
void run_sweep(const SweepSpec& spec);

}  // namespace hqmm
