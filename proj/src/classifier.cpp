#include "hqmm/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hqmm {

std::vector<MergeWitness> merging_criterion(const Hmm& model, double tol) {
  require_valid(model);
  const int n = model.state_count();
  const int m = model.symbol_count();
  std::vector<MergeWitness> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int r = 0; r < m; ++r)
          if (model.transitions[r](j, l) > tol && model.transitions[r](k, l) > tol)
            out.push_back({j, k, l, r});
  return out;
}

const char* gram_class_name(GramClass c) {
  switch (c) {
    case GramClass::orthogonal: return "orthogonal";
    case GramClass::zero_one_with_duplicates: return "zero-one-with-duplicates";
    default: return "general";
  }
}

const char* case_label(EqualityCase c) {
  switch (c) {
    case EqualityCase::i: return "i";
    case EqualityCase::iii: return "iii";
    default: return "v";
  }
}

GramClass classify_gram(const Matrix& gram, double tol) {
  bool any_one = false;
  for (int i = 0; i < gram.rows(); ++i)
    for (int k = 0; k < gram.cols(); ++k) {
      if (i == k) continue;
      const double g = gram(i, k);
      if (g > tol && g < 1.0 - tol) return GramClass::general;
      if (g >= 1.0 - tol) any_one = true;
    }
  return any_one ? GramClass::zero_one_with_duplicates : GramClass::orthogonal;
}

EqualityCase equality_case(GramClass c) {
  switch (c) {
    case GramClass::orthogonal: return EqualityCase::i;
    case GramClass::zero_one_with_duplicates: return EqualityCase::iii;
    default: return EqualityCase::v;
  }
}

void check_case_consistency(EqualityCase label, const ChainMetrics& metrics,
                            double tol) {
  std::ostringstream why;
  // the chain itself
  if (metrics.c_q - metrics.i_xy < -tol)
    why << "I(X;Y) exceeds the state entropy of the mixture; ";
  if (metrics.h_mu - metrics.c_q < -tol)
    why << "quantum state entropy exceeds H(mu); ";
  // what each structural label guarantees
  if (label == EqualityCase::i) {
    if (std::abs(metrics.i_xy - metrics.c_q) > tol)
      why << "orthogonal states but I(X;Y) != C_q; ";
    if (std::abs(metrics.c_q - metrics.h_mu) > tol)
      why << "orthogonal states but C_q != H(mu); ";
  } else if (label == EqualityCase::iii) {
    if (std::abs(metrics.i_xy - metrics.c_q) > tol)
      why << "commuting states but I(X;Y) != C_q; ";
  }
  const std::string msg = why.str();
  if (!msg.empty())
    throw ConsistencyError("case " + std::string(case_label(label)) +
                           " inconsistent with metrics: " + msg);
}

bool assert_impossible_cases(const ChainMetrics& metrics, const Matrix& gram,
                             double tol, double gram_tol) {
  bool interior_overlap = false;
  for (int i = 0; i < gram.rows(); ++i)
    for (int k = 0; k < gram.cols(); ++k) {
      if (i == k) continue;
      const double g = gram(i, k);
      if (g > gram_tol && g < 1.0 - gram_tol) interior_overlap = true;
    }

  const bool i_eq_cq = std::abs(metrics.i_xy - metrics.c_q) <= tol;
  const bool cq_lt_h = metrics.c_q < metrics.h_mu - tol;
  const bool i_lt_cq = metrics.i_xy < metrics.c_q - tol;
  const bool cq_eq_h = std::abs(metrics.c_q - metrics.h_mu) <= tol;

  const bool pattern_two = i_eq_cq && cq_lt_h && interior_overlap;
  const bool pattern_four = i_lt_cq && cq_eq_h;
  return !pattern_two && !pattern_four;
}

AnalysisReport analyze(const Hmm& model, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.model_name = model.name;
  rep.params = model.params;
  rep.n = model.state_count();
  rep.m = model.symbol_count();
  rep.state_labels = model.state_labels;
  rep.symbol_labels = model.symbol_labels;
  rep.base = opts.base;
  rep.asserted_epsilon_machine = opts.assert_epsilon_machine;
  rep.asserted_minimal = opts.assert_minimal;

  rep.validation = validate(model);
  if (!rep.validation.passed())
    throw ValidationError("invalid model '" + model.name + "':\n" +
                          rep.validation.to_string());
  for (const Violation& v : rep.validation.violations)
    rep.warnings.push_back(v.to_string());
  for (const std::string& note : model.notes) rep.warnings.push_back(note);

  rep.unifilar = is_unifilar(model);
  if (opts.assert_epsilon_machine && !rep.unifilar)
    throw ValidationError("--assert-epsilon-machine given, but the model is not "
                          "unifilar and cannot be an epsilon-machine");

  rep.h_mu = shannon_entropy(model.initial, opts.base);
  rep.i_xy = channel_mutual_information(model, opts.base);
  const QuantumModel qm = induce_quantum_model(model, opts.base);
  rep.c_q = qm.entropy;
  rep.c_q_diagonal = build_diagonal_construction(model, opts.base).entropy;
  if (opts.assert_epsilon_machine) rep.excess_exact = rep.i_xy;

  rep.holevo = holevo_report(model, qm);
  rep.gram_class = classify_gram(qm.gram);
  rep.label = equality_case(rep.gram_class);
  rep.witnesses = merging_criterion(model);
  check_case_consistency(rep.label, {rep.h_mu, rep.i_xy, rep.c_q});

  if (opts.with_excess_curve) {
    const int allowed = max_curve_depth(model.symbol_count(), opts.budget);
    int depth = opts.block_depth;
    if (allowed < depth) {
      depth = allowed;
      rep.curve_clamped = true;
      std::ostringstream note;
      note << "excess curve depth clamped to " << depth
           << " to stay within the word-enumeration budget";
      rep.warnings.push_back(note.str());
    }
    if (depth >= 1) rep.curve = excess_curve(model, depth, opts.base, opts.budget);
  }
  return rep;
}

}  // namespace hqmm
