#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hqmm/common.hpp"
#include "hqmm/linalg.hpp"

namespace hqmm {

// Finite transition-emitting HMM: one substochastic n x n matrix per output
// symbol, T[r](i, j) = probability of moving from state i to state j while
// emitting symbol r (rows are "from"), plus a distribution over states.
struct Hmm {
  std::string name;
  std::vector<std::string> state_labels;
  std::vector<std::string> symbol_labels;
  std::vector<Matrix> transitions;  // one per symbol
  std::vector<double> initial;
  // true when `initial` was computed as (or is known to be) the stationary
  // distribution; user-supplied distributions are checked but only warned on.
  bool stationary_initial = false;
  std::map<std::string, double> params;  // catalog parameters, if any
  std::vector<std::string> notes;        // advisory notes surfaced in reports

  int state_count() const { return static_cast<int>(state_labels.size()); }
  int symbol_count() const { return static_cast<int>(symbol_labels.size()); }

  // sum over symbols; row-stochastic for a valid model
  Matrix combined_transition() const;
};

struct Violation {
  enum class Code {
    entry_out_of_range,
    substochastic_row,
    initial_negative,
    initial_not_normalized,
    initial_not_invariant,
  };
  Code code;
  std::string where;
  double magnitude = 0.0;
  bool warning_only = false;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const;        // no hard violations (warnings allowed)
  bool clean() const;         // nothing at all
  std::string to_string() const;
};

// Checks every model invariant; dimension mismatches are structural and throw
// std::invalid_argument instead of being reported.
ValidationReport validate(const Hmm& model, double tol = kStochTol);

// Throws ValidationError when validate() reports hard violations.
void require_valid(const Hmm& model, double tol = kStochTol);

// Left eigenvector of sum_r T[r] for eigenvalue 1, normalized. Throws when the
// chain has no unique stationary distribution.
std::vector<double> stationary_distribution(const Hmm& model);

// Exact distribution of length-L output words. Word keys are raw symbol
// indices, one byte each, so map order equals lexicographic symbol order.
struct WordDistribution {
  int length = 0;
  LogBase base = LogBase::two;
  std::map<std::string, double> probs;  // only positive-probability words

  static std::string key(std::span<const int> symbols);
  double prob(std::span<const int> symbols) const;
  double total() const;
  double entropy() const;  // block entropy in `base`
};

WordDistribution word_distribution(const Hmm& model, int length,
                                   LogBase base = LogBase::two,
                                   std::size_t budget = kWordBudget);

struct SampleResult {
  std::vector<int> symbols;  // symbols[t] emitted from states[t]
  std::vector<int> states;   // states[0] drawn from the initial distribution
};

SampleResult sample(const Hmm& model, long steps, std::uint64_t seed);

// Merges states whose rows agree across all symbols (within tol): initial
// probabilities are added and incoming transition mass is summed into the
// representative. Repeats until no duplicates remain; idempotent otherwise.
Hmm merge_identical_states(const Hmm& model, double tol = kZeroTol);

// For each (state, symbol) at most one successor has positive probability.
bool is_unifilar(const Hmm& model, double tol = kZeroTol);

}  // namespace hqmm
