#include "hqmm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hqmm/alt_quantum.hpp"
#include "hqmm/catalog.hpp"
#include "hqmm/classifier.hpp"
#include "hqmm/report_io.hpp"

namespace hqmm {

namespace {

bool needs_eps(const std::string& column) {
  return column == "i_markov" || column == "i_3state" || column == "c_q_markov" ||
         column == "c_q_3state" || column == "c_cl_lower_bound" || column == "c_eps";
}

double binary_entropy(double x, LogBase base) {
  return (eta(x) + eta(1.0 - x)) / log_divisor(base);
}

}  // namespace

const std::vector<std::string>& sweep_column_names() {
  static const std::vector<std::string> names = {
      "h_mu",       "i_xy",       "c_q",          "c_q_diagonal",
      "e_curve_last", "case_label", "i_markov",     "i_3state",
      "c_q_markov", "c_q_3state", "c_cl_lower_bound", "c_eps"};
  return names;
}

void check_sweep_spec(const SweepSpec& spec) {
  if (spec.catalog_id.empty())
    throw std::invalid_argument("sweep needs a catalog model (file models have no "
                                "named parameters to sweep)");
  catalog::find(spec.catalog_id);
  if (spec.param.empty()) throw std::invalid_argument("sweep: no parameter named");
  if (!(spec.step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
  if (spec.start > spec.stop)
    throw std::invalid_argument("sweep: start must not exceed stop");
  if (spec.columns.empty()) throw std::invalid_argument("sweep: no columns selected");

  const auto& known = sweep_column_names();
  for (const std::string& c : spec.columns) {
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("sweep: unknown column '" + c + "'");
    if (needs_eps(c) && spec.param != "eps" && !spec.fixed.contains("eps"))
      throw std::invalid_argument("sweep: column '" + c +
                                  "' needs an 'eps' parameter in scope");
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  const long count =
      static_cast<long>(std::floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (long i = 0; i < count; ++i) grid[i] = spec.start + i * spec.step;
  return grid;
}

std::vector<std::string> sweep_rows(const SweepSpec& spec) {
  check_sweep_spec(spec);
  const std::vector<double> grid = sweep_grid(spec);

  std::string header = spec.param;
  for (const std::string& c : spec.columns) header += "," + c;
  std::vector<std::string> rows(grid.size() + 1);
  rows[0] = std::move(header);

#ifdef _OPENMP
  if (spec.jobs > 0) omp_set_num_threads(spec.jobs);
#endif

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(grid.size()); ++idx) {
    try {
      std::map<std::string, double> params = spec.fixed;
      params[spec.param] = grid[idx];
      const double eps = params.contains("eps") ? params.at("eps") : 0.0;

      // the base model and its report are shared by most columns
      const Hmm model = catalog::build_hmm(spec.catalog_id, params);
      AnalyzeOptions opts;
      opts.base = spec.base;
      opts.block_depth = spec.block_depth;
      opts.with_excess_curve =
          std::find(spec.columns.begin(), spec.columns.end(), "e_curve_last") !=
          spec.columns.end();
      const AnalysisReport rep = analyze(model, opts);

      std::string row = format_double(grid[idx]);
      for (const std::string& c : spec.columns) {
        row += ',';
        if (c == "h_mu")
          row += format_double(rep.h_mu);
        else if (c == "i_xy")
          row += format_double(rep.i_xy);
        else if (c == "c_q")
          row += format_double(rep.c_q);
        else if (c == "c_q_diagonal")
          row += format_double(rep.c_q_diagonal);
        else if (c == "e_curve_last")
          row += rep.curve ? format_double(rep.curve->last()) : "nan";
        else if (c == "case_label")
          row += case_label(rep.label);
        else if (c == "i_markov")
          row += format_double(
              channel_mutual_information(catalog::perturbed_coin_em(eps), spec.base));
        else if (c == "i_3state")
          row += format_double(channel_mutual_information(
              catalog::perturbed_coin_3state(eps), spec.base));
        else if (c == "c_q_markov")
          row += format_double(
              induce_quantum_model(catalog::perturbed_coin_em(eps), spec.base).entropy);
        else if (c == "c_q_3state")
          row += format_double(
              induce_quantum_model(catalog::perturbed_coin_3state(eps), spec.base)
                  .entropy);
        else if (c == "c_cl_lower_bound")
          row += format_double(binary_entropy(eps / 2.0, spec.base));
        else if (c == "c_eps")
          row += format_double(std::log(2.0) / log_divisor(spec.base));
      }
      rows[idx + 1] = std::move(row);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void run_sweep(const SweepSpec& spec) {
  check_sweep_spec(spec);
  if (spec.out_path.empty()) throw std::invalid_argument("sweep: no output path");
  if (!spec.force && std::filesystem::exists(spec.out_path))
    throw std::invalid_argument("sweep: refusing to overwrite '" + spec.out_path +
                                "' without --force");
  const std::vector<std::string> rows = sweep_rows(spec);
  std::ofstream out(spec.out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("sweep: cannot write '" + spec.out_path + "'");
  for (const std::string& row : rows) out << row << '\n';
}

}  // namespace hqmm
