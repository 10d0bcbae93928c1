#include <doctest.h>

#include "hqmm/catalog.hpp"
#include "hqmm/classifier.hpp"
#include "oracles.hpp"

using namespace hqmm;

namespace {

bool has_witness(const std::vector<MergeWitness>& ws, int a, int b, int to, int sym) {
  for (const MergeWitness& w : ws)
    if (w.from_a == a && w.from_b == b && w.to == to && w.symbol == sym) return true;
  return false;
}

}  // namespace

TEST_CASE("merging witnesses of the rnc") {
  const auto witnesses = merging_criterion(catalog::rnc(0.5, 0.7));
  CHECK(has_witness(witnesses, 1, 2, 0, 0));  // B and C can both reach A on 0
  CHECK(merging_criterion(catalog::rnc(0.5, 0.0)).empty());
}

TEST_CASE("merging witnesses of the perturbed coin") {
  CHECK(merging_criterion(catalog::perturbed_coin_em(1.0)).empty());
  for (double eps : {0.2, 0.6, 0.99})
    CHECK(has_witness(merging_criterion(catalog::perturbed_coin_em(eps)), 0, 1, 0, 0));
}

TEST_CASE("witness list is empty exactly when the overlaps vanish") {
  Rng rng(4242);
  std::vector<Hmm> models = {catalog::rnc(0.5, 0.0), catalog::rnc(0.5, 0.7),
                             catalog::perturbed_coin_em(0.4), catalog::four_symbol()};
  for (int trial = 0; trial < 40; ++trial) models.push_back(oracle::random_model(rng));
  for (const Hmm& model : models) {
    const QuantumModel qm = induce_quantum_model(model);
    const bool no_witnesses = merging_criterion(model).empty();
    const bool orthogonal = classify_gram(qm.gram) == GramClass::orthogonal;
    CHECK(no_witnesses == orthogonal);
  }
}

TEST_CASE("equality cases across the rnc family") {
  auto label_of = [](double q) {
    return analyze(catalog::rnc(0.5, q), {}).label;
  };
  CHECK(label_of(0.0) == EqualityCase::i);
  CHECK(label_of(1.0) == EqualityCase::iii);
  CHECK(label_of(0.7) == EqualityCase::v);
}

TEST_CASE("case i comes with equalities, case v with strict gaps") {
  const AnalysisReport orthogonal = analyze(catalog::rnc(0.5, 0.0), {});
  CHECK(orthogonal.i_xy == doctest::Approx(orthogonal.c_q).epsilon(1e-10));
  CHECK(orthogonal.c_q == doctest::Approx(orthogonal.h_mu).epsilon(1e-10));

  const AnalysisReport duplicate = analyze(catalog::rnc(0.5, 1.0), {});
  CHECK(duplicate.i_xy == doctest::Approx(duplicate.c_q).epsilon(1e-10));
  CHECK(duplicate.c_q < duplicate.h_mu - 1e-6);

  const AnalysisReport general = analyze(catalog::rnc(0.5, 0.7), {});
  CHECK(general.i_xy < general.c_q - 1e-6);
  CHECK(general.c_q < general.h_mu - 1e-6);
}

TEST_CASE("impossible-case patterns are absent on the rnc family") {
  for (double q : {0.0, 0.5, 0.7, 1.0}) {
    const Hmm model = catalog::rnc(0.5, q);
    const QuantumModel qm = induce_quantum_model(model);
    const ChainMetrics metrics{shannon_entropy(model.initial),
                               channel_mutual_information(model), qm.entropy};
    CHECK(assert_impossible_cases(metrics, qm.gram));
  }
}

TEST_CASE("impossible-case detector actually fires on forged metrics") {
  const QuantumModel qm = induce_quantum_model(catalog::rnc(0.5, 0.7));
  // I = C_q < H with an interior overlap: the forbidden second pattern
  CHECK_FALSE(assert_impossible_cases({1.5, 1.2, 1.2}, qm.gram));
  // I < C_q = H: the forbidden fourth pattern
  CHECK_FALSE(assert_impossible_cases({1.5, 1.2, 1.5}, qm.gram));
}

TEST_CASE("structural classification matches the numeric relations") {
  Rng rng(11811);
  std::vector<Hmm> models;
  for (int trial = 0; trial < 120; ++trial) models.push_back(oracle::random_model(rng));
  for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) models.push_back(catalog::rnc(0.35, q));
  for (const Hmm& model : models) {
    const QuantumModel qm = induce_quantum_model(model);
    const double h_mu = shannon_entropy(model.initial);
    const double i_xy = channel_mutual_information(model);
    const bool orthogonal = max_abs_diff(qm.gram, Matrix::identity(qm.n)) <= kZeroTol;
    const bool all_equal = std::abs(qm.entropy - h_mu) <= 10 * kStochTol &&
                           std::abs(i_xy - qm.entropy) <= 10 * kStochTol;
    CHECK(orthogonal == all_equal);
    CHECK(assert_impossible_cases({h_mu, i_xy, qm.entropy}, qm.gram));
    CHECK_NOTHROW(check_case_consistency(equality_case(classify_gram(qm.gram)),
                                         {h_mu, i_xy, qm.entropy}));
  }
}

TEST_CASE("case iii models merge into orthogonal ones") {
  for (double p : {0.2, 0.5, 0.8}) {
    const Hmm model = catalog::rnc(p, 1.0);
    const AnalysisReport rep = analyze(model, {});
    REQUIRE(rep.label == EqualityCase::iii);
    const Hmm merged = merge_identical_states(model);
    CHECK(merged.state_count() < model.state_count());
    const QuantumModel qm = induce_quantum_model(merged);
    CHECK(max_abs_diff(qm.gram, Matrix::identity(qm.n)) <= kZeroTol);
  }
}

TEST_CASE("witnesses in mid-range parameters come with an entropy gap") {
  // unifilar catalog entries: a witness opens H(mu) - E > 0.01, with E_L below E
  for (double eps : {0.2, 0.5, 0.8}) {
    const Hmm model = catalog::perturbed_coin_em(eps);
    REQUIRE_FALSE(merging_criterion(model).empty());
    const double e10 = excess_curve(model, 10).last();
    CHECK(e10 < shannon_entropy(model.initial) - 0.01);
  }
  for (double p : {0.2, 0.8})
    for (double q : {0.2, 0.8}) {
      const Hmm model = catalog::rnc(p, q);
      REQUIRE_FALSE(merging_criterion(model).empty());
      const double e10 = excess_curve(model, 10).last();
      CHECK(e10 < shannon_entropy(model.initial) - 0.01);
    }
}

TEST_CASE("analyze report on a degenerate single-state model") {
  Hmm single;
  single.name = "one";
  single.state_labels = {"s"};
  single.symbol_labels = {"a"};
  single.transitions = {Matrix(1, 1, 1.0)};
  single.initial = {1.0};
  single.stationary_initial = true;
  const AnalysisReport rep = analyze(single, {});
  CHECK(rep.h_mu == 0.0);
  CHECK(rep.i_xy == 0.0);
  CHECK(rep.c_q == 0.0);
  CHECK(rep.c_q_diagonal == 0.0);
  CHECK(rep.label == EqualityCase::i);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("analyze rejects the epsilon-machine assertion on non-unifilar input") {
  AnalyzeOptions opts;
  opts.assert_epsilon_machine = true;
  CHECK_THROWS_AS(analyze(catalog::perturbed_coin_3state(0.5), opts), ValidationError);
  CHECK_NOTHROW(analyze(catalog::perturbed_coin_em(0.5), opts));
}

TEST_CASE("analyze clamps the excess curve for wide alphabets") {
  AnalyzeOptions opts;
  opts.block_depth = 8;
  const AnalysisReport rep = analyze(catalog::four_symbol(), opts);
  REQUIRE(rep.curve.has_value());
  CHECK(rep.curve_clamped);
  CHECK(rep.curve->values.size() == 5);  // 4^(2*5) is the deepest within budget
}
