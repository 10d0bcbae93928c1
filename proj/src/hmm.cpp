#include "hqmm/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hqmm/rng.hpp"

namespace hqmm {

Matrix Hmm::combined_transition() const {
  const int n = state_count();
  Matrix a(n, n);
  for (const Matrix& t : transitions)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) += t(i, j);
  return a;
}

std::string Violation::to_string() const {
  static const char* names[] = {
      "entry out of range", "substochastic row", "negative initial entry",
      "initial not normalized", "non-invariant initial distribution"};
  std::ostringstream os;
  os << (warning_only ? "warning: " : "violation: ") << names[static_cast<int>(code)]
     << " at " << where << " (magnitude " << magnitude << ")";
  return os.str();
}

bool ValidationReport::passed() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return !v.warning_only; });
}

bool ValidationReport::clean() const { return violations.empty(); }

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const Violation& v : violations) {
    out += v.to_string();
    out += '\n';
  }
  return out;
}

namespace {

void check_shape(const Hmm& model) {
  const int n = model.state_count();
  const int m = model.symbol_count();
  if (n < 1) throw std::invalid_argument("model has no states");
  if (m < 1) throw std::invalid_argument("model has no symbols");
  if (static_cast<int>(model.transitions.size()) != m)
    throw std::invalid_argument("transition matrix count does not match symbol count");
  for (const Matrix& t : model.transitions)
    if (t.rows() != n || t.cols() != n)
      throw std::invalid_argument("transition matrix is not state_count x state_count");
  if (static_cast<int>(model.initial.size()) != n)
    throw std::invalid_argument("initial distribution length does not match state count");
}

}  // namespace

ValidationReport validate(const Hmm& model, double tol) {
  check_shape(model);
  const int n = model.state_count();
  const int m = model.symbol_count();
  ValidationReport report;

  for (int r = 0; r < m; ++r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double x = model.transitions[r](i, j);
        if (x < -tol || x > 1.0 + tol) {
          std::ostringstream where;
          where << "T[" << model.symbol_labels[r] << "][" << model.state_labels[i]
                << "][" << model.state_labels[j] << "]";
          report.violations.push_back({Violation::Code::entry_out_of_range, where.str(),
                                       x < 0.0 ? -x : x - 1.0, false});
        }
      }

  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < n; ++j) sum += model.transitions[r](i, j);
    if (std::abs(sum - 1.0) > tol)
      report.violations.push_back({Violation::Code::substochastic_row,
                                   "row " + model.state_labels[i], std::abs(sum - 1.0),
                                   false});
  }

  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = model.initial[i];
    if (x < -tol)
      report.violations.push_back({Violation::Code::initial_negative,
                                   "initial[" + model.state_labels[i] + "]", -x, false});
    total += x;
  }
  if (std::abs(total - 1.0) > tol)
    report.violations.push_back(
        {Violation::Code::initial_not_normalized, "initial", std::abs(total - 1.0), false});

  // Invariance mu = mu * sum_r T[r]. Hard when the distribution claims to be
  // stationary, otherwise a warning: user-supplied distributions are legal.
  const std::vector<double> next = left_apply(model.initial, model.combined_transition());
  double dev = 0.0;
  for (int j = 0; j < n; ++j) dev = std::max(dev, std::abs(next[j] - model.initial[j]));
  if (dev > tol)
    report.violations.push_back({Violation::Code::initial_not_invariant, "initial", dev,
                                 !model.stationary_initial});

  return report;
}

void require_valid(const Hmm& model, double tol) {
  const ValidationReport report = validate(model, tol);
  if (!report.passed())
    throw ValidationError("invalid model '" + model.name + "':\n" + report.to_string());
}

std::vector<double> stationary_distribution(const Hmm& model) {
  // shape check without touching `initial` (often not yet set here)
  const int n = model.state_count();
  if (n < 1) throw std::invalid_argument("model has no states");
  if (model.transitions.empty()) throw std::invalid_argument("model has no symbols");
  for (const Matrix& t : model.transitions)
    if (t.rows() != n || t.cols() != n)
      throw std::invalid_argument("transition matrix is not state_count x state_count");
  return stationary_left_fixed_point(model.combined_transition());
}

std::string WordDistribution::key(std::span<const int> symbols) {
  std::string k;
  k.reserve(symbols.size());
  for (int s : symbols) k.push_back(static_cast<char>(s));
  return k;
}

double WordDistribution::prob(std::span<const int> symbols) const {
  const auto it = probs.find(key(symbols));
  return it == probs.end() ? 0.0 : it->second;
}

double WordDistribution::total() const {
  double s = 0.0;
  for (const auto& [w, p] : probs) s += p;
  return s;
}

double WordDistribution::entropy() const {
  double h = 0.0;
  for (const auto& [w, p] : probs) h += eta(p);
  return h / log_divisor(base);
}

namespace {

void check_word_budget(int m, int length, std::size_t budget) {
  double count = 1.0;
  for (int l = 0; l < length; ++l) {
    count *= m;
    if (count > static_cast<double>(budget)) {
      std::ostringstream msg;
      msg << "word enumeration budget exceeded: " << m << "^" << length
          << " > " << budget << " (requested length " << length << ")";
      throw BudgetError(msg.str());
    }
  }
}

}  // namespace

WordDistribution word_distribution(const Hmm& model, int length, LogBase base,
                                   std::size_t budget) {
  if (length < 1) throw std::invalid_argument("word length must be positive");
  require_valid(model);
  check_word_budget(model.symbol_count(), length, budget);

  WordDistribution out;
  out.length = length;
  out.base = base;

  const int m = model.symbol_count();
  std::vector<int> word(length, 0);
  // depth-first expansion, pruning branches of exactly zero probability
  auto expand = [&](auto&& self, const std::vector<double>& v, int depth) -> void {
    for (int r = 0; r < m; ++r) {
      const std::vector<double> w = left_apply(v, model.transitions[r]);
      const double mass = std::accumulate(w.begin(), w.end(), 0.0);
      if (mass <= 0.0) continue;
      word[depth] = r;
      if (depth + 1 == length)
        out.probs.emplace(WordDistribution::key(word), mass);
      else
        self(self, w, depth + 1);
    }
  };
  expand(expand, model.initial, 0);
  return out;
}

SampleResult sample(const Hmm& model, long steps, std::uint64_t seed) {
  require_valid(model);
  const int n = model.state_count();
  const int m = model.symbol_count();

  Rng rng(seed);
  SampleResult out;
  out.symbols.reserve(steps);
  out.states.reserve(steps);

  int state = rng.categorical(model.initial);
  std::vector<double> outcome(static_cast<std::size_t>(n) * m);
  for (long t = 0; t < steps; ++t) {
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < n; ++j)
        outcome[static_cast<std::size_t>(r) * n + j] = model.transitions[r](state, j);
    const int pick = rng.categorical(outcome);
    out.states.push_back(state);
    out.symbols.push_back(pick / n);
    state = pick % n;
  }
  return out;
}

namespace {

bool rows_identical(const Hmm& model, int i, int k, double tol) {
  for (const Matrix& t : model.transitions)
    for (int j = 0; j < model.state_count(); ++j)
      if (std::abs(t(i, j) - t(k, j)) > tol) return false;
  return true;
}

// single merging pass; returns the model unchanged when nothing merged
Hmm merge_pass(const Hmm& model, double tol, bool& changed) {
  const int n = model.state_count();
  const int m = model.symbol_count();

  std::vector<int> group(n, -1);
  std::vector<int> representatives;
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < static_cast<int>(representatives.size()); ++g)
      if (rows_identical(model, representatives[g], i, tol)) {
        group[i] = g;
        break;
      }
    if (group[i] < 0) {
      group[i] = static_cast<int>(representatives.size());
      representatives.push_back(i);
    }
  }

  const int k = static_cast<int>(representatives.size());
  changed = k != n;
  if (!changed) return model;

  Hmm merged;
  merged.name = model.name;
  merged.symbol_labels = model.symbol_labels;
  merged.params = model.params;
  merged.notes = model.notes;
  merged.stationary_initial = model.stationary_initial;
  merged.state_labels.resize(k);
  merged.initial.assign(k, 0.0);
  for (int i = 0; i < n; ++i) {
    merged.state_labels[group[i]] += model.state_labels[i];
    merged.initial[group[i]] += model.initial[i];
  }
  merged.transitions.assign(m, Matrix(k, k));
  for (int r = 0; r < m; ++r)
    for (int g = 0; g < k; ++g)
      for (int j = 0; j < n; ++j)
        merged.transitions[r](g, group[j]) += model.transitions[r](representatives[g], j);
  return merged;
}

}  // namespace

Hmm merge_identical_states(const Hmm& model, double tol) {
  require_valid(model);
  Hmm current = model;
  bool changed = true;
  while (changed) current = merge_pass(current, tol, changed);
  return current;
}

bool is_unifilar(const Hmm& model, double tol) {
  for (const Matrix& t : model.transitions)
    for (int i = 0; i < model.state_count(); ++i) {
      int successors = 0;
      for (int j = 0; j < model.state_count(); ++j)
        if (t(i, j) > tol) ++successors;
      if (successors > 1) return false;
    }
  return true;
}

}  // namespace hqmm
