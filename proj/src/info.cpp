#include "hqmm/info.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hqmm {

namespace {

void check_distribution(std::span<const double> dist, double tol, const char* what) {
  double total = 0.0;
  for (double p : dist) {
    if (p < -tol) {
      std::ostringstream msg;
      msg << what << ": negative probability " << p;
      throw ValidationError(msg.str());
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream msg;
    msg << what << ": probabilities sum to " << total;
    throw ValidationError(msg.str());
  }
}

// Entropy of a multiset of probabilities, summed over sorted values so the
// result is independent of input order.
double entropy_sorted(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double h = 0.0;
  for (double p : values) h += eta(p);
  return h;
}

}  // namespace

double shannon_entropy(std::span<const double> dist, LogBase base, double tol) {
  check_distribution(dist, tol, "shannon_entropy");
  double h = 0.0;
  for (double p : dist) h += eta(p);
  return h / log_divisor(base);
}

double mutual_information(const Matrix& joint, LogBase base, double tol) {
  check_distribution(joint.flat(), tol, "mutual_information");

  const int rows = joint.rows(), cols = joint.cols();
  std::vector<double> px(rows, 0.0), py(cols, 0.0);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) py[j] += joint(i, j);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) px[i] += joint(i, j);

  double hx = 0.0, hy = 0.0;
  for (double p : px) hx += eta(p);
  for (double p : py) hy += eta(p);
  std::vector<double> entries(joint.flat().begin(), joint.flat().end());
  const double hxy = entropy_sorted(std::move(entries));

  const double mi = (hx + hy - hxy) / log_divisor(base);
  return std::max(mi, 0.0);
}

std::vector<double> ChannelDistribution::output_marginal() const {
  std::vector<double> out(joint.cols(), 0.0);
  for (int j = 0; j < joint.cols(); ++j)
    for (int i = 0; i < joint.rows(); ++i) out[j] += joint(i, j);
  return out;
}

ChannelDistribution channel_distribution(const Hmm& model) {
  require_valid(model);
  const int n = model.state_count();
  const int m = model.symbol_count();
  ChannelDistribution ch;
  ch.n = n;
  ch.m = m;
  ch.input = model.initial;
  ch.joint = Matrix(n, n * m);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < n; ++j)
        ch.joint(i, j * m + r) = model.initial[i] * model.transitions[r](i, j);
  return ch;
}

double channel_mutual_information(const Hmm& model, LogBase base) {
  return mutual_information(channel_distribution(model).joint, base);
}

namespace {

void check_block_budget(int m, int max_len, std::size_t budget) {
  double count = 1.0;
  for (int l = 0; l < max_len; ++l) {
    count *= m;
    if (count > static_cast<double>(budget)) {
      std::ostringstream msg;
      msg << "block entropy budget exceeded: " << m << "^" << max_len << " > "
          << budget;
      throw BudgetError(msg.str());
    }
  }
}

// Depth-first accumulation of -P log P per depth below one starting vector.
// `scratch` holds one vector per depth so the hot loop never allocates.
void accumulate_entropies(const Hmm& model, const std::vector<double>& start,
                          int start_depth, int max_len, std::vector<double>& sums,
                          std::vector<std::vector<double>>& scratch) {
  const int m = model.symbol_count();
  auto rec = [&](auto&& self, const std::vector<double>& v, int depth) -> void {
    for (int r = 0; r < m; ++r) {
      std::vector<double>& w = scratch[depth + 1];
      const Matrix& t = model.transitions[r];
      std::fill(w.begin(), w.end(), 0.0);
      for (int i = 0; i < t.rows(); ++i) {
        const double vi = v[i];
        if (vi == 0.0) continue;
        for (int j = 0; j < t.cols(); ++j) w[j] += vi * t(i, j);
      }
      const double mass = std::accumulate(w.begin(), w.end(), 0.0);
      if (mass <= 0.0) continue;
      sums[depth + 1] += eta(mass);
      if (depth + 1 < max_len) self(self, w, depth + 1);
    }
  };
  rec(rec, start, start_depth);
}

}  // namespace

std::vector<double> block_entropies_serial(const Hmm& model, int max_len, LogBase base,
                                           std::size_t budget) {
  if (max_len < 1) throw std::invalid_argument("block length must be positive");
  require_valid(model);
  check_block_budget(model.symbol_count(), max_len, budget);

  std::vector<double> sums(max_len + 1, 0.0);
  std::vector<std::vector<double>> scratch(max_len + 1,
                                           std::vector<double>(model.state_count()));
  accumulate_entropies(model, model.initial, 0, max_len, sums, scratch);

  std::vector<double> out(max_len);
  for (int l = 1; l <= max_len; ++l) out[l - 1] = sums[l] / log_divisor(base);
  return out;
}

std::vector<double> block_entropies(const Hmm& model, int max_len, LogBase base,
                                    std::size_t budget) {
  if (max_len < 1) throw std::invalid_argument("block length must be positive");
  require_valid(model);
  check_block_budget(model.symbol_count(), max_len, budget);

  const int m = model.symbol_count();
  const int n = model.state_count();

  // Grow the frontier to a fixed size (independent of the thread count, so
  // output bytes do not depend on --jobs), collecting the shallow entropy
  // terms along the way.
  constexpr int kFrontierTarget = 256;
  std::vector<double> sums(max_len + 1, 0.0);
  std::vector<std::pair<int, std::vector<double>>> frontier;  // (depth, vector)
  frontier.emplace_back(0, model.initial);
  while (static_cast<int>(frontier.size()) < kFrontierTarget) {
    // expand the shallowest depth present; stop when everything is at max_len
    const int depth = frontier.front().first;
    if (depth >= max_len) break;
    std::vector<std::pair<int, std::vector<double>>> next;
    next.reserve(frontier.size() * m);
    bool expanded = false;
    for (auto& [d, v] : frontier) {
      if (d != depth) {
        next.emplace_back(d, std::move(v));
        continue;
      }
      for (int r = 0; r < m; ++r) {
        std::vector<double> w = left_apply(v, model.transitions[r]);
        const double mass = std::accumulate(w.begin(), w.end(), 0.0);
        if (mass <= 0.0) continue;
        sums[d + 1] += eta(mass);
        if (d + 1 < max_len) next.emplace_back(d + 1, std::move(w));
      }
      expanded = true;
    }
    frontier = std::move(next);
    if (!expanded || frontier.empty()) break;
  }

  // Per-subtree partial sums, reduced in frontier order.
  const int count = static_cast<int>(frontier.size());
  std::vector<std::vector<double>> partials(count);
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < count; ++idx) {
    std::vector<double> local(max_len + 1, 0.0);
    std::vector<std::vector<double>> scratch(max_len + 1, std::vector<double>(n));
    accumulate_entropies(model, frontier[idx].second, frontier[idx].first, max_len,
                         local, scratch);
    partials[idx] = std::move(local);
  }
  for (int idx = 0; idx < count; ++idx)
    for (int l = 0; l <= max_len; ++l) sums[l] += partials[idx][l];

  std::vector<double> out(max_len);
  for (int l = 1; l <= max_len; ++l) out[l - 1] = sums[l] / log_divisor(base);
  return out;
}

double ExcessCurve::last_increment() const {
  if (values.size() < 2) return values.empty() ? 0.0 : values.back().second;
  return std::abs(values.back().second - values[values.size() - 2].second);
}

ExcessCurve excess_curve(const Hmm& model, int max_depth, LogBase base,
                         std::size_t budget) {
  if (max_depth < 1) throw std::invalid_argument("curve depth must be positive");
  check_block_budget(model.symbol_count(), 2 * max_depth, budget);

  const std::vector<double> h = block_entropies(model, 2 * max_depth, base, budget);
  ExcessCurve curve;
  curve.base = base;
  curve.values.reserve(max_depth);
  for (int l = 1; l <= max_depth; ++l)
    curve.values.emplace_back(l, std::max(0.0, 2.0 * h[l - 1] - h[2 * l - 1]));
  return curve;
}

int max_curve_depth(int symbol_count, std::size_t budget) {
  constexpr int kDepthCap = 64;  // unary alphabets fit any depth
  int depth = 0;
  double count = 1.0;
  while (depth < kDepthCap) {
    count *= symbol_count * symbol_count;  // one more L means two more block symbols
    if (count > static_cast<double>(budget)) return depth;
    ++depth;
  }
  return depth;
}

double excess_entropy_epsilon_machine(const Hmm& model, LogBase base) {
  require_valid(model);
  if (!is_unifilar(model))
    throw ValidationError(
        "model is not unifilar: some (state, symbol) pair has several possible "
        "successors, so the channel mutual information is only an upper bound on "
        "the excess entropy, not its exact value");
  return channel_mutual_information(model, base);
}

}  // namespace hqmm
