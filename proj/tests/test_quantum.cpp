#include <doctest.h>

#include <array>
#include <cmath>

#include "hqmm/catalog.hpp"
#include "hqmm/info.hpp"
#include "hqmm/quantum.hpp"
#include "oracles.hpp"

using namespace hqmm;

TEST_CASE("induced states of the rnc have the printed overlaps") {
  for (double q : {0.0, 0.3, 0.7, 1.0}) {
    const QuantumModel qm = induce_quantum_model(catalog::rnc(0.5, q));
    CHECK(qm.gram(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(qm.gram(0, 2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(qm.gram(1, 2) == doctest::Approx(std::sqrt(q)).epsilon(1e-14));
    for (int i = 0; i < 3; ++i) CHECK(qm.gram(i, i) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("induced coin states overlap by sqrt(1 - eps^2)") {
  for (double eps : {0.2, 0.6, 1.0}) {
    const QuantumModel qm = induce_quantum_model(catalog::perturbed_coin_em(eps));
    CHECK(qm.gram(0, 1) == doctest::Approx(std::sqrt(1 - eps * eps)).epsilon(1e-13));
  }
  const QuantumModel qm = induce_quantum_model(catalog::perturbed_coin_em(1.0));
  CHECK(max_abs_diff(qm.gram, Matrix::identity(2)) <= kZeroTol);
}

TEST_CASE("state vectors reconstruct the transition probabilities") {
  for (const Hmm& model : {catalog::rnc(0.3, 0.8), catalog::four_symbol()}) {
    const QuantumModel qm = induce_quantum_model(model);
    for (int i = 0; i < qm.n; ++i)
      for (int j = 0; j < qm.n; ++j)
        for (int r = 0; r < qm.m; ++r) {
          const double amp = qm.state_vectors[i][static_cast<std::size_t>(j) * qm.m + r];
          CHECK(amp * amp ==
                doctest::Approx(model.transitions[r](i, j)).epsilon(1e-12));
        }
  }
}

TEST_CASE("density spectrum of the rnc matches the closed form") {
  for (double p : {0.1, 0.5, 0.9})
    for (double q : {0.0, 0.4, 1.0}) {
      const QuantumModel qm = induce_quantum_model(catalog::rnc(p, q));
      const auto expected = oracle::rnc_spectrum(p, q);
      REQUIRE(qm.spectrum.size() == 3);
      for (int k = 0; k < 3; ++k)
        CHECK(qm.spectrum[k] == doctest::Approx(expected[k]).epsilon(1e-11));
    }
}

TEST_CASE("orthogonal states give the weights as the spectrum") {
  const QuantumModel qm = induce_quantum_model(catalog::rnc(0.3, 0.0));
  CHECK(qm.spectrum[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qm.spectrum[1] == doctest::Approx(0.35).epsilon(1e-12));
  CHECK(qm.spectrum[2] == doctest::Approx(0.15).epsilon(1e-12));
}

TEST_CASE("four-symbol state entropy") {
  const QuantumModel qm = induce_quantum_model(catalog::four_symbol());
  CHECK(qm.entropy == doctest::Approx(oracle::four_symbol_c_q()).epsilon(1e-12));
  CHECK(std::abs(qm.entropy - 1.2018) <= 5e-4);
}

TEST_CASE("von Neumann entropy basics") {
  CHECK(von_neumann_entropy(std::array{0.5, 0.25, 0.25}) ==
        doctest::Approx(1.5).epsilon(1e-14));
  // two-level maximally mixed state
  CHECK(von_neumann_entropy(hermitian_eigenvalues(catalog::monras_2level().rho)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // rnc at q = 1: duplicate states collapse the spectrum to (1/2, 1/2, 0)
  const QuantumModel merged = induce_quantum_model(catalog::rnc(0.5, 1.0));
  CHECK(merged.entropy == doctest::Approx(1.0).epsilon(1e-12));
  // mid-range overlap, against the closed-form spectrum
  CHECK(induce_quantum_model(catalog::rnc(0.5, 0.5)).entropy ==
        doctest::Approx(oracle::rnc_c_q(0.5, 0.5)).epsilon(1e-12));
}

TEST_CASE("holevo report across the rnc family") {
  auto report = [](double q) {
    const Hmm model = catalog::rnc(0.5, q);
    return holevo_report(model, induce_quantum_model(model));
  };
  const HolevoReport orthogonal = report(0.0);
  CHECK(orthogonal.commuting);
  CHECK(std::abs(orthogonal.gap) <= 10 * kStochTol);

  const HolevoReport general = report(0.7);
  CHECK_FALSE(general.commuting);
  CHECK(general.gap > 1e-3);

  const HolevoReport duplicate = report(1.0);
  CHECK(duplicate.commuting);
  CHECK(std::abs(duplicate.gap) <= 10 * kStochTol);
}

TEST_CASE("chain I <= C_q <= H(mu) with Prop-3 equality iff orthogonal") {
  Rng rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    const Hmm model = oracle::random_model(rng);
    const QuantumModel qm = induce_quantum_model(model);
    const double i_xy = channel_mutual_information(model);
    const double h_mu = shannon_entropy(model.initial);
    CHECK(i_xy <= qm.entropy + 10 * kStochTol);
    CHECK(qm.entropy <= h_mu + 10 * kStochTol);
    const bool orthogonal = max_abs_diff(qm.gram, Matrix::identity(qm.n)) <= kZeroTol;
    const bool equal = std::abs(qm.entropy - h_mu) <= 10 * kStochTol;
    CHECK(orthogonal == equal);
  }
}

TEST_CASE("weighted-gram spectrum matches the explicit density matrix") {
  Rng rng(808);
  std::vector<Hmm> models = {catalog::perturbed_coin_em(0.37),
                             catalog::perturbed_coin_3state(0.37),
                             catalog::rnc(0.21, 0.84), catalog::rnc_merged(0.6)};
  for (int trial = 0; trial < 10; ++trial) models.push_back(oracle::random_model(rng, 4, 3));
  for (const Hmm& model : models) {
    const QuantumModel qm = induce_quantum_model(model);
    if (qm.n * qm.m > 12) continue;
    const std::vector<double> full = symmetric_eigenvalues(full_density_matrix(qm));
    for (int k = 0; k < qm.n; ++k)
      CHECK(qm.spectrum[k] == doctest::Approx(full[k]).epsilon(1e-9));
    for (std::size_t k = qm.n; k < full.size(); ++k)
      CHECK(std::abs(full[k]) <= 1e-9);
  }
}

TEST_CASE("projective simulation is deterministic and matches the absorbing coin") {
  const QuantumModel qm = induce_quantum_model(catalog::perturbed_coin_em(1.0));
  bool seen_state0 = false;
  for (std::uint64_t seed = 0; seed < 8 && !seen_state0; ++seed) {
    const auto symbols = simulate_hqmm(qm, 10, seed);
    CHECK(symbols == simulate_hqmm(qm, 10, seed));
    if (symbols[0] != 0) continue;
    seen_state0 = true;
    for (int s : symbols) CHECK(s == 0);
  }
  CHECK(seen_state0);
}

TEST_CASE("projective simulation of a single-state model is constant") {
  Hmm single;
  single.name = "one";
  single.state_labels = {"s"};
  single.symbol_labels = {"a"};
  single.transitions = {Matrix(1, 1, 1.0)};
  single.initial = {1.0};
  single.stationary_initial = true;
  const auto symbols = simulate_hqmm(induce_quantum_model(single), 20, 3);
  for (int s : symbols) CHECK(s == 0);
}

TEST_CASE("projective simulation reproduces the classical statistics") {
  for (const Hmm& model : {catalog::perturbed_coin_em(0.5),
                           catalog::perturbed_coin_3state(0.5), catalog::rnc(0.5, 0.7),
                           catalog::rnc_merged(0.5), catalog::four_symbol()}) {
    const auto symbols = simulate_hqmm(induce_quantum_model(model), 1'000'000, 2024);
    for (int block : {1, 2, 3}) {
      const auto exact = word_distribution(model, block).probs;
      CHECK(oracle::tv_distance(oracle::block_frequencies(symbols, block), exact) <=
            0.01);
    }
  }
}

TEST_CASE("two-level model: emission laws via exact enumeration") {
  const GenericHqmm h = catalog::monras_2level();
  check_generic_hqmm(h);

  const auto one = hqmm_word_distribution(h, 1);
  for (const auto& [w, p] : one) CHECK(p == doctest::Approx(0.25).epsilon(1e-13));

  // conditional next-step law after emitting symbol 0: (1/2, 0, 1/4, 1/4)
  const auto two = hqmm_word_distribution(h, 2);
  auto cond = [&](int second) {
    std::string key = {'\0', static_cast<char>(second)};
    const auto it = two.find(key);
    return (it == two.end() ? 0.0 : it->second) / 0.25;
  };
  CHECK(cond(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cond(1) == doctest::Approx(0.0));
  CHECK(cond(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cond(3) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("one-dimensional identity operation is a fixed point") {
  GenericHqmm h;
  h.dim = 1;
  h.name = "unit";
  h.symbol_labels = {"a"};
  h.kraus = {{CMatrix::identity(1)}};
  h.rho = CMatrix::identity(1);
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    CHECK(hqmm_step(h, rng) == 0);
    CHECK(h.rho(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("generic hqmm invariants are checked") {
  GenericHqmm h = catalog::monras_2level();
  h.kraus[0][0](0, 0) *= 1.1;
  CHECK_THROWS_AS(check_generic_hqmm(h), ValidationError);

  GenericHqmm bad_rho = catalog::monras_2level();
  bad_rho.rho(0, 0) = 0.9;
  CHECK_THROWS_AS(check_generic_hqmm(bad_rho), ValidationError);
}
