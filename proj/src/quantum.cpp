#include "hqmm/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hqmm/info.hpp"

namespace hqmm {

QuantumModel induce_quantum_model(const Hmm& model, LogBase base) {
  require_valid(model);
  const int n = model.state_count();
  const int m = model.symbol_count();

  QuantumModel qm;
  qm.n = n;
  qm.m = m;
  qm.base = base;
  qm.symbol_labels = model.symbol_labels;
  qm.weights = model.initial;

  qm.state_vectors.assign(n, std::vector<double>(static_cast<std::size_t>(n) * m, 0.0));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < n; ++j) {
        const double t = model.transitions[r](i, j);
        if (t > 0.0) qm.state_vectors[i][static_cast<std::size_t>(j) * m + r] = std::sqrt(t);
      }

  qm.gram = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      double dot = 0.0;
      for (std::size_t c = 0; c < qm.state_vectors[i].size(); ++c)
        dot += qm.state_vectors[i][c] * qm.state_vectors[k][c];
      qm.gram(i, k) = dot;
      qm.gram(k, i) = dot;
    }

  qm.spectrum = density_spectrum(qm.weights, qm.gram);
  qm.entropy = von_neumann_entropy(qm.spectrum, base);
  return qm;
}

std::vector<double> density_spectrum(std::span<const double> weights,
                                     const Matrix& gram) {
  const int n = gram.rows();
  Matrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double pi = std::max(weights[i], 0.0);
      const double pk = std::max(weights[k], 0.0);
      w(i, k) = std::sqrt(pi * pk) * gram(i, k);
    }
  std::vector<double> values = symmetric_eigenvalues(w);
  for (double& x : values) {
    if (x < -kEigTol) {
      std::ostringstream msg;
      msg << "density spectrum: eigenvalue " << x << " below -" << kEigTol
          << " (corrupt input)";
      throw ConsistencyError(msg.str());
    }
    if (x < 0.0) x = 0.0;
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (std::abs(total - 1.0) > n * kEigTol + kStochTol) {
    std::ostringstream msg;
    msg << "density spectrum sums to " << total;
    throw ConsistencyError(msg.str());
  }
  return values;
}

double von_neumann_entropy(std::span<const double> spectrum, LogBase base) {
  return shannon_entropy(spectrum, base);
}

Matrix full_density_matrix(const QuantumModel& qm) {
  const int d = qm.n * qm.m;
  Matrix rho(d, d);
  for (int i = 0; i < qm.n; ++i) {
    const auto& v = qm.state_vectors[i];
    const double p = qm.weights[i];
    if (p <= 0.0) continue;
    for (int a = 0; a < d; ++a) {
      if (v[a] == 0.0) continue;
      for (int b = 0; b < d; ++b) rho(a, b) += p * v[a] * v[b];
    }
  }
  return rho;
}

bool zero_one_gram(const Matrix& gram, double tol) {
  for (int i = 0; i < gram.rows(); ++i)
    for (int k = 0; k < gram.cols(); ++k) {
      if (i == k) continue;
      const double g = gram(i, k);
      if (g > tol && g < 1.0 - tol) return false;
    }
  return true;
}

HolevoReport holevo_report(const Hmm& model, const QuantumModel& qm) {
  HolevoReport rep;
  rep.lhs = channel_mutual_information(model, qm.base);
  rep.rhs = qm.entropy;
  rep.gap = rep.rhs - rep.lhs;
  rep.commuting = zero_one_gram(qm.gram);
  return rep;
}

std::vector<int> simulate_hqmm(const QuantumModel& qm, long steps, std::uint64_t seed) {
  const int d = qm.n * qm.m;
  Rng rng(seed);
  std::vector<int> symbols;
  symbols.reserve(steps);

  Matrix rho(d, d);
  auto prepare = [&](int state) {
    const auto& v = qm.state_vectors[state];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) rho(a, b) = v[a] * v[b];
  };
  prepare(rng.categorical(qm.weights));

  std::vector<double> probs(d);
  for (long t = 0; t < steps; ++t) {
    // coordinate projector K_{r,j}: Tr(K rho K) is the diagonal entry at (j,r)
    double total = 0.0;
    for (int c = 0; c < d; ++c) {
      probs[c] = std::max(rho(c, c), 0.0);
      total += probs[c];
    }
    if (total <= 0.0)
      throw ConsistencyError("simulate_hqmm: all outcome probabilities vanished");
    const int pick = rng.categorical(probs);
    const int next_state = pick / qm.m;
    symbols.push_back(pick % qm.m);
    prepare(next_state);
  }
  return symbols;
}

void check_generic_hqmm(const GenericHqmm& h, double tol) {
  const int d = h.dim;
  if (d < 1) throw std::invalid_argument("hqmm dimension must be positive");
  if (h.rho.rows() != d || h.rho.cols() != d)
    throw std::invalid_argument("hqmm state matrix has wrong shape");
  if (h.kraus.size() != h.symbol_labels.size())
    throw std::invalid_argument("hqmm operator count does not match symbol count");

  CMatrix sum(d, d);
  for (const auto& ops : h.kraus)
    for (const CMatrix& k : ops) {
      if (k.rows() != d || k.cols() != d)
        throw std::invalid_argument("hqmm operator has wrong shape");
      sum = sum + adjoint(k) * k;
    }
  if (max_abs_diff(sum, CMatrix::identity(d)) > tol + kStochTol)
    throw ValidationError("hqmm operations are not trace-preserving");

  if (max_abs_diff(h.rho, adjoint(h.rho)) > tol + kStochTol)
    throw ValidationError("hqmm state is not Hermitian");
  if (std::abs(trace(h.rho).real() - 1.0) > tol + kStochTol ||
      std::abs(trace(h.rho).imag()) > tol + kStochTol)
    throw ValidationError("hqmm state does not have unit trace");
  for (double ev : hermitian_eigenvalues(h.rho))
    if (ev < -(tol + kStochTol))
      throw ValidationError("hqmm state is not positive semidefinite");
}

namespace {

CMatrix apply_operation(const std::vector<CMatrix>& ops, const CMatrix& rho) {
  CMatrix out(rho.rows(), rho.cols());
  for (const CMatrix& k : ops) out = out + k * rho * adjoint(k);
  return out;
}

}  // namespace

int hqmm_step(GenericHqmm& h, Rng& rng) {
  const int m = h.symbol_count();
  std::vector<CMatrix> updated(m);
  std::vector<double> probs(m);
  for (int r = 0; r < m; ++r) {
    updated[r] = apply_operation(h.kraus[r], h.rho);
    probs[r] = std::max(trace(updated[r]).real(), 0.0);
  }
  const int r = rng.categorical(probs);
  if (probs[r] <= 0.0)
    throw ConsistencyError("hqmm_step: all symbol probabilities vanished");
  h.rho = std::move(updated[r]);
  scale(h.rho, 1.0 / trace(h.rho).real());
  return r;
}

std::vector<int> simulate_generic_hqmm(GenericHqmm h, long steps, std::uint64_t seed) {
  check_generic_hqmm(h);
  Rng rng(seed);
  std::vector<int> symbols;
  symbols.reserve(steps);
  for (long t = 0; t < steps; ++t) symbols.push_back(hqmm_step(h, rng));
  return symbols;
}

std::map<std::string, double> hqmm_word_distribution(const GenericHqmm& h, int length) {
  if (length < 1) throw std::invalid_argument("word length must be positive");
  check_generic_hqmm(h);

  std::map<std::string, double> out;
  const int m = h.symbol_count();
  std::string word(length, '\0');
  // unnormalized states: P(word) = Tr(K_{w_L} ... K_{w_1}(rho))
  auto expand = [&](auto&& self, const CMatrix& state, int depth) -> void {
    for (int r = 0; r < m; ++r) {
      const CMatrix next = apply_operation(h.kraus[r], state);
      const double mass = trace(next).real();
      if (mass <= 0.0) continue;
      word[depth] = static_cast<char>(r);
      if (depth + 1 == length)
        out.emplace(word, mass);
      else
        self(self, next, depth + 1);
    }
  };
  expand(expand, h.rho, 0);
  return out;
}

}  // namespace hqmm
