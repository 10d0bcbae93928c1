// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run with a criterion number as the only argument to run just that one.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "hqmm/alt_quantum.hpp"
#include "hqmm/catalog.hpp"
#include "hqmm/classifier.hpp"
#include "hqmm/info.hpp"
#include "hqmm/quantum.hpp"
#include "hqmm/sweep.hpp"
#include "oracles.hpp"

using namespace hqmm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    note(what);
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// ---- 1: closed forms of the random-noisy-copy family on a 21 x 21 grid ----

Outcome criterion_rnc_closed_forms() {
  Outcome out;
  double worst_h = 0.0, worst_e = 0.0, worst_spec = 0.0;
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) {
      const double p = a / 20.0, q = b / 20.0;
      const Hmm model = catalog::rnc(p, q);
      worst_h = std::max(worst_h,
                         std::abs(shannon_entropy(model.initial) - oracle::rnc_h_mu(p)));
      worst_e = std::max(worst_e, std::abs(excess_entropy_epsilon_machine(model) -
                                           oracle::rnc_excess(p, q)));
      const QuantumModel qm = induce_quantum_model(model);
      const auto expected = oracle::rnc_spectrum(p, q);
      for (int k = 0; k < 3; ++k)
        worst_spec = std::max(worst_spec, std::abs(qm.spectrum[k] - expected[k]));
    }
  out.require(worst_h <= 1e-9, "H(mu) deviates by " + fmt(worst_h));
  out.require(worst_e <= 1e-9, "E deviates by " + fmt(worst_e));
  out.require(worst_spec <= 1e-9, "spectrum deviates by " + fmt(worst_spec));
  out.note("max dev: H(mu) " + fmt(worst_h) + ", E " + fmt(worst_e) +
           ", spectrum " + fmt(worst_spec));
  return out;
}

// ---- 2: qualitative structure of the three q-slices ----

Outcome criterion_q_slices() {
  Outcome out;
  auto slice = [&](double q) {
    std::vector<AnalysisReport> reports;
    for (int k = 0; k <= 100; ++k) {
      AnalyzeOptions opts;
      opts.with_excess_curve = false;
      reports.push_back(analyze(catalog::rnc(k / 100.0, q), opts));
    }
    return reports;
  };

  double worst = 0.0;
  for (const AnalysisReport& r : slice(0.0)) {
    worst = std::max(worst, std::abs(r.c_q - r.h_mu));
    out.require(r.label == EqualityCase::i, "q=0: case " +
                                                std::string(case_label(r.label)) +
                                                " at p=" + fmt(r.params.at("p")));
  }
  out.require(worst <= 1e-9, "q=0: |C_q - H(mu)| up to " + fmt(worst));
  out.note("q=0 max|C_q-H| " + fmt(worst));

  for (const AnalysisReport& r : slice(1.0)) {
    const double p = r.params.at("p");
    out.require(r.label == EqualityCase::iii,
                "q=1: case " + std::string(case_label(r.label)) + " at p=" + fmt(p));
    out.require(std::abs(r.i_xy - r.c_q) <= 1e-9,
                "q=1: I != C_q at p=" + fmt(p));
    if (p >= 0.1 - 1e-12 && p <= 0.9 + 1e-12)
      out.require(r.h_mu - r.c_q >= 1e-6, "q=1: C_q not below H(mu) at p=" + fmt(p));
  }

  for (const AnalysisReport& r : slice(0.7)) {
    const double p = r.params.at("p");
    if (p < 0.1 - 1e-12 || p > 0.9 + 1e-12) continue;
    out.require(r.c_q - r.i_xy >= 1e-6, "q=0.7: I gap closes at p=" + fmt(p));
    out.require(r.h_mu - r.c_q >= 1e-6, "q=0.7: C_q gap closes at p=" + fmt(p));
  }
  return out;
}

// ---- 3: the perturbed-coin pair ----

Outcome criterion_perturbed_coin() {
  Outcome out;
  double worst_markov = 0.0, worst_3state = 0.0, worst_h = 0.0;
  for (int k = 1; k <= 19; ++k) {
    const double eps = k * 0.05;
    worst_markov = std::max(
        worst_markov, std::abs(channel_mutual_information(catalog::perturbed_coin_em(eps)) -
                               oracle::coin_i_markov(eps)));
    const Hmm three = catalog::perturbed_coin_3state(eps);
    worst_3state = std::max(worst_3state,
                            std::abs(channel_mutual_information(three) - eps));
    worst_h = std::max(worst_h,
                       std::abs(shannon_entropy(three.initial) - oracle::coin3_h(eps)));
  }
  out.require(worst_markov <= 1e-9, "I_Markov deviates by " + fmt(worst_markov));
  out.require(worst_3state <= 1e-9, "I_3state deviates by " + fmt(worst_3state));
  out.require(worst_h <= 1e-9, "H(p) deviates by " + fmt(worst_h));

  for (double eps : {0.05, 0.1, 0.15, 0.2}) {
    const double h = shannon_entropy(catalog::perturbed_coin_3state(eps).initial);
    out.require(h < 1.0, "three-state H(p) not below C_eps=1 at eps=" + fmt(eps));
  }
  out.note("max dev: I_Markov " + fmt(worst_markov) + ", I_3state " +
           fmt(worst_3state) + ", H(p) " + fmt(worst_h));
  return out;
}

// ---- 4: the four-symbol process and its two-level quantum model ----

Outcome criterion_four_symbol() {
  Outcome out;
  const Hmm model = catalog::four_symbol();
  const ConstructionComparison cmp = compare_constructions(model);
  out.require(std::abs(cmp.h_mu - 2.0) <= 1e-9, "H(mu) != 2");
  out.require(std::abs(cmp.i_xy - 0.5) <= 1e-9, "I(X;Y) != 1/2");
  out.require(std::abs(cmp.c_q_diagonal - 2.0) <= 1e-9, "diagonal entropy != 2");
  out.require(std::abs(cmp.c_q_induced - 1.2018) <= 5e-4,
              "induced entropy " + fmt(cmp.c_q_induced) + " not within 5e-4 of 1.2018");
  out.require(cmp.monras_applicable && std::abs(*cmp.monras_entropy - 1.0) <= 1e-9,
              "two-level entropy != 1");

  const GenericHqmm two_level = catalog::monras_2level();
  double worst_tv = 0.0;
  for (int length = 1; length <= 4; ++length) {
    const auto classical = word_distribution(model, length).probs;
    const auto quantum = hqmm_word_distribution(two_level, length);
    for (const auto& [w, prob] : classical) {
      const auto it = quantum.find(w);
      worst_tv = std::max(worst_tv,
                          std::abs(prob - (it == quantum.end() ? 0.0 : it->second)));
    }
    for (const auto& [w, prob] : quantum)
      if (!classical.contains(w)) worst_tv = std::max(worst_tv, prob);
  }
  out.require(worst_tv <= 1e-9, "word probabilities deviate by " + fmt(worst_tv));
  out.note("C_q " + fmt(cmp.c_q_induced) + ", two-level words dev " + fmt(worst_tv));
  return out;
}

// ---- 5: inequality chain on 500 seeded random models ----

Outcome criterion_random_chain() {
  Outcome out;
  Rng rng(20250809);
  std::vector<Hmm> models;
  models.reserve(500);
  for (int k = 0; k < 500; ++k) models.push_back(oracle::random_model(rng, 6, 3));

  std::vector<std::string> problems(models.size());
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(models.size()); ++idx) {
    const Hmm& model = models[idx];
    std::ostringstream bad;
    const double tol = 1e-8;
    const double h_mu = shannon_entropy(model.initial);
    const double i_xy = channel_mutual_information(model);
    const QuantumModel qm = induce_quantum_model(model);

    for (const auto& [l, e] : excess_curve(model, 6).values)
      if (e > i_xy + tol) bad << "E_" << l << " above I; ";
    if (i_xy > qm.entropy + tol) bad << "I above C_q; ";
    if (qm.entropy > h_mu + tol) bad << "C_q above H(mu); ";

    const bool orthogonal = max_abs_diff(qm.gram, Matrix::identity(qm.n)) <= kZeroTol;
    if (orthogonal != (std::abs(qm.entropy - h_mu) <= tol))
      bad << "Prop-3 equality mismatch; ";

    const HolevoReport hol = holevo_report(model, qm);
    if (hol.gap < -tol) bad << "negative Holevo gap; ";
    if (hol.commuting != (hol.gap <= tol)) bad << "Holevo equality mismatch; ";

    if (!assert_impossible_cases({h_mu, i_xy, qm.entropy}, qm.gram))
      bad << "impossible-case pattern; ";
    problems[idx] = bad.str();
  }
  int failures = 0;
  for (std::size_t idx = 0; idx < problems.size(); ++idx)
    if (!problems[idx].empty()) {
      ++failures;
      out.require(false, "model " + std::to_string(idx) + ": " + problems[idx]);
    }
  out.note(std::to_string(500 - failures) + "/500 models clean");
  return out;
}

// ---- 6: excess-curve convergence at depth 10 ----

Outcome criterion_convergence() {
  Outcome out;
  int checked = 0;
  auto check_model = [&](const Hmm& model, const std::string& tag) {
    ++checked;
    const double e10 = excess_curve(model, 10).last();
    const double i_xy = channel_mutual_information(model);
    out.require(std::abs(e10 - i_xy) <= 0.01,
                tag + ": |E_10 - I| = " + fmt(std::abs(e10 - i_xy)));
  };
  for (double eps : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8})
    check_model(catalog::perturbed_coin_em(eps), "coin eps=" + fmt(eps));
  for (double p : {0.2, 0.5, 0.8})
    for (double q : {0.2, 0.5, 0.8})
      check_model(catalog::rnc(p, q), "rnc(" + fmt(p) + "," + fmt(q) + ")");
  for (double p : {0.2, 0.5, 0.8})
    check_model(catalog::rnc(p, 1.0), "rnc(" + fmt(p) + ",1)");
  out.note(std::to_string(checked) + " models checked at L=10");
  return out;
}

// ---- 7: simulation equivalence ----

Outcome criterion_simulation() {
  Outcome out;
  const Hmm model = catalog::rnc(0.5, 0.7);
  constexpr long kSteps = 1'000'000;
  const auto exact = word_distribution(model, 3).probs;

  const double tv_classical = oracle::tv_distance(
      oracle::block_frequencies(sample(model, kSteps, 12345).symbols, 3), exact);
  const double tv_quantum = oracle::tv_distance(
      oracle::block_frequencies(
          simulate_hqmm(induce_quantum_model(model), kSteps, 54321), 3),
      exact);
  out.require(tv_classical <= 0.01, "classical TV " + fmt(tv_classical));
  out.require(tv_quantum <= 0.01, "quantum TV " + fmt(tv_quantum));
  out.note("TV classical " + fmt(tv_classical) + ", quantum " + fmt(tv_quantum));
  return out;
}

// ---- 8: spectrum oracle against the explicit density matrix ----

Outcome criterion_spectrum_oracle() {
  Outcome out;
  const std::vector<Hmm> models = {
      catalog::perturbed_coin_em(0.5), catalog::perturbed_coin_3state(0.5),
      catalog::rnc(0.5, 0.7), catalog::rnc_merged(0.5), catalog::four_symbol()};
  double worst = 0.0;
  for (const Hmm& model : models) {
    const QuantumModel qm = induce_quantum_model(model);
    if (qm.n * qm.m > 16) continue;
    const auto full = symmetric_eigenvalues(full_density_matrix(qm));
    for (int k = 0; k < qm.n * qm.m; ++k) {
      const double expected = k < qm.n ? qm.spectrum[k] : 0.0;
      worst = std::max(worst, std::abs(full[k] - expected));
    }
  }
  out.require(worst <= 1e-9, "spectra deviate by " + fmt(worst));
  out.note("max deviation " + fmt(worst));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rnc-closed-forms", criterion_rnc_closed_forms},
      {"q-slice-structure", criterion_q_slices},
      {"perturbed-coin", criterion_perturbed_coin},
      {"four-symbol-exhibit", criterion_four_symbol},
      {"random-model-chain", criterion_random_chain},
      {"excess-convergence", criterion_convergence},
      {"simulation-equivalence", criterion_simulation},
      {"spectrum-oracle", criterion_spectrum_oracle},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && only != static_cast<int>(k + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.note(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << (k + 1) << "  "
              << criteria[k].first << "  [" << fmt(seconds) << "s]  "
              << outcome.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
