#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hqmm/alt_quantum.hpp"
#include "hqmm/hmm.hpp"
#include "hqmm/info.hpp"
#include "hqmm/quantum.hpp"

namespace hqmm {

// Pair of states that can reach the same successor on the same symbol; the
// existence of any witness is exactly what opens a gap between the excess
// entropy and the internal state entropy.
struct MergeWitness {
  int from_a = 0, from_b = 0;  // from_a < from_b
  int to = 0;
  int symbol = 0;
};

std::vector<MergeWitness> merging_criterion(const Hmm& model, double tol = kZeroTol);

enum class GramClass { orthogonal, zero_one_with_duplicates, general };
const char* gram_class_name(GramClass c);

// i: all overlaps 0 (every entropy in the chain coincides)
// iii: overlaps all 0 or 1 with at least one 1 (redundant states)
// v: anything else (strict gaps)
enum class EqualityCase { i, iii, v };
const char* case_label(EqualityCase c);

GramClass classify_gram(const Matrix& gram, double tol = kZeroTol);
EqualityCase equality_case(GramClass c);

struct ChainMetrics {
  double h_mu = 0.0;
  double i_xy = 0.0;
  double c_q = 0.0;
};

// Verifies the numeric relations a structural label guarantees; throws
// ConsistencyError when they fail beyond tolerance (that is a bug, not input).
void check_case_consistency(EqualityCase label, const ChainMetrics& metrics,
                            double tol = 10.0 * kStochTol);

// False exactly when the metrics exhibit one of the two impossible patterns:
// I = C_q < H(mu) with some overlap strictly between 0 and 1, or
// I < C_q = H(mu).
bool assert_impossible_cases(const ChainMetrics& metrics, const Matrix& gram,
                             double tol = 10.0 * kStochTol, double gram_tol = kZeroTol);

struct AnalyzeOptions {
  LogBase base = LogBase::two;
  int block_depth = 8;
  std::size_t budget = kWordBudget;
  bool assert_epsilon_machine = false;
  bool assert_minimal = false;
  bool with_excess_curve = true;
};

struct AnalysisReport {
  std::string model_name;
  std::map<std::string, double> params;
  int n = 0, m = 0;
  std::vector<std::string> state_labels;
  std::vector<std::string> symbol_labels;
  LogBase base = LogBase::two;
  bool asserted_epsilon_machine = false;
  bool asserted_minimal = false;

  double h_mu = 0.0;
  double i_xy = 0.0;
  double c_q = 0.0;
  double c_q_diagonal = 0.0;
  std::optional<double> excess_exact;  // = i_xy when asserted an epsilon-machine

  std::optional<ExcessCurve> curve;
  bool curve_clamped = false;

  HolevoReport holevo;
  GramClass gram_class = GramClass::general;
  EqualityCase label = EqualityCase::v;
  std::vector<MergeWitness> witnesses;
  bool unifilar = false;

  std::vector<std::string> warnings;
  ValidationReport validation;
};

// Full pipeline: validation, classical and quantum entropies, Holevo data,
// classification, merge witnesses, excess curve (depth clamped to the word
// budget, with a warning).
AnalysisReport analyze(const Hmm& model, const AnalyzeOptions& opts = {});

}  // namespace hqmm
