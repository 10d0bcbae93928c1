#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hqmm/common.hpp"
#include "hqmm/hmm.hpp"
#include "hqmm/linalg.hpp"

namespace hqmm {

// H(p) = -sum p log p. Entries must be nonnegative and sum to 1 within tol.
double shannon_entropy(std::span<const double> dist, LogBase base = LogBase::two,
                       double tol = kStochTol);

// I from an explicit joint table: H(X) + H(Y) - H(X,Y), clamped at 0. The
// joint entropy is accumulated over sorted entries so that transposing the
// table gives the bit-identical result.
double mutual_information(const Matrix& joint, LogBase base = LogBase::two,
                          double tol = kStochTol);

// The classical channel read off an HMM: input X = current state under the
// model's distribution, output Y = (next state, symbol) with kernel
// P(Y=(j,r) | X=i) = T[r](i,j). Column index is j * m + r.
struct ChannelDistribution {
  int n = 0, m = 0;
  std::vector<double> input;  // law of X
  Matrix joint;               // n x (n*m), rows X, columns Y

  std::vector<double> output_marginal() const;
};

ChannelDistribution channel_distribution(const Hmm& model);

// I(X;Y) of the channel above.
double channel_mutual_information(const Hmm& model, LogBase base = LogBase::two);

// Block entropies H_1..H_max of the exact word distributions, without
// materializing the words. The default path splits the expansion tree at a
// fixed frontier and fans the subtrees out across OpenMP threads; partial
// sums are reduced in frontier order, so results do not depend on the thread
// count. block_entropies_serial is the plain depth-first reference.
std::vector<double> block_entropies(const Hmm& model, int max_len,
                                    LogBase base = LogBase::two,
                                    std::size_t budget = kWordBudget);
std::vector<double> block_entropies_serial(const Hmm& model, int max_len,
                                           LogBase base = LogBase::two,
                                           std::size_t budget = kWordBudget);

// Mutual information between adjacent length-L blocks, E_L = 2 H_L - H_2L,
// which rises monotonically towards the excess entropy.
struct ExcessCurve {
  LogBase base = LogBase::two;
  std::vector<std::pair<int, double>> values;  // (L, E_L), L = 1..depth

  double last() const { return values.back().second; }
  // |E_L - E_{L-1}| at the deepest point; convergence diagnostic
  double last_increment() const;
};

ExcessCurve excess_curve(const Hmm& model, int max_depth, LogBase base = LogBase::two,
                         std::size_t budget = kWordBudget);

// Largest curve depth whose 2L-block enumeration fits the budget.
int max_curve_depth(int symbol_count, std::size_t budget = kWordBudget);

// For unifilar models the channel mutual information equals the excess
// entropy exactly; throws on non-unifilar input.
double excess_entropy_epsilon_machine(const Hmm& model, LogBase base = LogBase::two);

}  // namespace hqmm
