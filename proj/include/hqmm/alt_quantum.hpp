#pragma once

#include <optional>

#include "hqmm/hmm.hpp"
#include "hqmm/quantum.hpp"

namespace hqmm {

// Diagonal quantum construction: basis states |i>, rank-one operators
// sqrt(T[r](j,i)) |i><j| per (i, j, r), state diag(mu). Its state entropy
// always equals H(mu), so it never beats the classical model.
struct DiagonalConstruction {
  GenericHqmm hqmm;
  double entropy = 0.0;  // von Neumann entropy of diag(mu), in `base`
  LogBase base = LogBase::two;
};

DiagonalConstruction build_diagonal_construction(const Hmm& model,
                                                 LogBase base = LogBase::two);

// Side-by-side entropies of the two quantum constructions for one model.
// monras_entropy is filled for the built-in four-symbol process, where a
// hand-crafted two-level model beats both constructions.
struct ConstructionComparison {
  LogBase base = LogBase::two;
  double h_mu = 0.0;
  double i_xy = 0.0;
  double c_q_induced = 0.0;
  double c_q_diagonal = 0.0;
  bool monras_applicable = false;
  std::optional<double> monras_entropy;
};

ConstructionComparison compare_constructions(const Hmm& model,
                                             LogBase base = LogBase::two);

}  // namespace hqmm
