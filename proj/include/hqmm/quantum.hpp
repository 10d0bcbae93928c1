#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hqmm/common.hpp"
#include "hqmm/hmm.hpp"
#include "hqmm/linalg.hpp"
#include "hqmm/rng.hpp"

namespace hqmm {

// Quantum model induced by an HMM: one unit vector per internal state with
// amplitude sqrt(T[r](i,j)) at coordinate j*m + r, mixed with the model's
// state distribution. The nonzero spectrum of the mixture equals that of the
// weighted Gram matrix sqrt(p_i p_k) <S_i|S_k>, which is what gets solved.
struct QuantumModel {
  int n = 0, m = 0;
  LogBase base = LogBase::two;
  std::vector<std::string> symbol_labels;
  std::vector<std::vector<double>> state_vectors;  // n vectors of length n*m
  std::vector<double> weights;
  Matrix gram;                   // overlaps <S_i|S_k>
  std::vector<double> spectrum;  // descending, clamped at 0, sums to 1
  double entropy = 0.0;          // von Neumann entropy of the mixture
};

QuantumModel induce_quantum_model(const Hmm& model, LogBase base = LogBase::two);

// Nonzero eigenvalues of the mixture, via the weighted Gram matrix.
std::vector<double> density_spectrum(std::span<const double> weights,
                                     const Matrix& gram);

double von_neumann_entropy(std::span<const double> spectrum,
                           LogBase base = LogBase::two);

// The explicit (n*m) x (n*m) density matrix sum_i p_i |S_i><S_i|; brute-force
// route used to cross-check density_spectrum.
Matrix full_density_matrix(const QuantumModel& qm);

// All off-diagonal overlaps are (within tol) either 0 or 1 -- exactly when the
// coded pure states commute and the Holevo bound is tight.
bool zero_one_gram(const Matrix& gram, double tol = kZeroTol);

struct HolevoReport {
  double lhs = 0.0;  // I(X;Y)
  double rhs = 0.0;  // state entropy of the mixture (pure parts contribute 0)
  double gap = 0.0;
  bool commuting = false;
};

HolevoReport holevo_report(const Hmm& model, const QuantumModel& qm);

// Runs the projective dynamics: measure (next state, symbol) with the
// coordinate projectors, emit the symbol, re-prepare the next state vector.
// The full density matrix is carried through each update.
std::vector<int> simulate_hqmm(const QuantumModel& qm, long steps, std::uint64_t seed);

// General hidden quantum Markov model: per-symbol quantum operations in
// operator-sum form over a d-dimensional space, plus the current state.
struct GenericHqmm {
  int dim = 0;
  std::string name;
  std::vector<std::string> symbol_labels;
  std::vector<std::vector<CMatrix>> kraus;  // kraus[r] = operators of symbol r
  CMatrix rho;

  int symbol_count() const { return static_cast<int>(symbol_labels.size()); }
};

// Trace preservation, Hermiticity, positivity, unit trace (within kEigTol).
void check_generic_hqmm(const GenericHqmm& h, double tol = kEigTol);

// Draws one symbol with P(r) = Tr(sum_k K_{r,k} rho K_{r,k}^dag), applies the
// operation and renormalizes. Returns the symbol index.
int hqmm_step(GenericHqmm& h, Rng& rng);

std::vector<int> simulate_generic_hqmm(GenericHqmm h, long steps, std::uint64_t seed);

// Exact distribution of length-L words emitted by the operation dynamics.
std::map<std::string, double> hqmm_word_distribution(const GenericHqmm& h, int length);

}  // namespace hqmm
