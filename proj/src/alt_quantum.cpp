#include "hqmm/alt_quantum.hpp"

#include <cmath>
#include <sstream>

#include "hqmm/catalog.hpp"
#include "hqmm/info.hpp"

namespace hqmm {

DiagonalConstruction build_diagonal_construction(const Hmm& model, LogBase base) {
  require_valid(model);
  const int n = model.state_count();
  const int m = model.symbol_count();

  DiagonalConstruction out;
  out.base = base;
  out.hqmm.dim = n;
  out.hqmm.name = model.name + " (diagonal)";
  out.hqmm.symbol_labels = model.symbol_labels;
  out.hqmm.kraus.resize(m);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double t = model.transitions[r](j, i);
        if (t <= 0.0) continue;  // zero operators contribute nothing
        CMatrix k(n, n);
        k(i, j) = std::sqrt(t);
        out.hqmm.kraus[r].push_back(std::move(k));
      }
  out.hqmm.rho = CMatrix(n, n);
  for (int i = 0; i < n; ++i) out.hqmm.rho(i, i) = std::max(model.initial[i], 0.0);

  check_generic_hqmm(out.hqmm);

  // Emission law must match the classical rows exactly.
  for (int j = 0; j < n; ++j) {
    CMatrix pure(n, n);
    pure(j, j) = 1.0;
    for (int r = 0; r < m; ++r) {
      CMatrix moved(n, n);
      for (const CMatrix& k : out.hqmm.kraus[r]) moved = moved + k * pure * adjoint(k);
      double expected = 0.0;
      for (int i = 0; i < n; ++i) expected += model.transitions[r](j, i);
      if (std::abs(trace(moved).real() - expected) > kEigTol + kStochTol) {
        std::ostringstream msg;
        msg << "diagonal construction emission mismatch at state "
            << model.state_labels[j] << ", symbol " << model.symbol_labels[r];
        throw ConsistencyError(msg.str());
      }
    }
  }

  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = out.hqmm.rho(i, i).real();
  out.entropy = von_neumann_entropy(diag, base);
  return out;
}

ConstructionComparison compare_constructions(const Hmm& model, LogBase base) {
  require_valid(model);
  ConstructionComparison cmp;
  cmp.base = base;
  cmp.h_mu = shannon_entropy(model.initial, base);
  cmp.i_xy = channel_mutual_information(model, base);
  cmp.c_q_induced = induce_quantum_model(model, base).entropy;
  cmp.c_q_diagonal = build_diagonal_construction(model, base).entropy;

  // The two-level model is specific to the four-symbol process.
  const Hmm reference = catalog::four_symbol();
  bool matches = model.state_count() == reference.state_count() &&
                 model.symbol_count() == reference.symbol_count();
  if (matches)
    for (int r = 0; r < reference.symbol_count() && matches; ++r)
      matches = max_abs_diff(model.transitions[r], reference.transitions[r]) <= kZeroTol;
  cmp.monras_applicable = matches;
  if (matches) {
    const GenericHqmm two_level = catalog::monras_2level();
    cmp.monras_entropy = von_neumann_entropy(hermitian_eigenvalues(two_level.rho), base);
  }
  return cmp;
}

}  // namespace hqmm
