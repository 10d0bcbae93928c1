#include "hqmm/catalog.hpp"

#include <cmath>
#include <sstream>

namespace hqmm::catalog {

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix a(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double x : row) a(i, j++) = x;
    ++i;
  }
  return a;
}

void check_range(const Entry& entry, const std::string& name, double value) {
  for (const ParamSpec& p : entry.params) {
    if (p.name != name) continue;
    const bool below = p.lo_open ? value <= p.lo : value < p.lo;
    if (below || value > p.hi) {
      std::ostringstream msg;
      msg << entry.id << ": parameter " << name << " = " << value
          << " outside its range " << (p.lo_open ? "(" : "[") << p.lo << ", " << p.hi
          << "]";
      throw std::invalid_argument(msg.str());
    }
    return;
  }
  throw std::invalid_argument(entry.id + ": unknown parameter '" + name + "'");
}

double take_param(const Entry& entry, const std::map<std::string, double>& params,
                  const std::string& name) {
  for (const ParamSpec& p : entry.params)
    if (p.name == name) {
      const auto it = params.find(name);
      const double value = it == params.end() ? p.default_value : it->second;
      check_range(entry, name, value);
      return value;
    }
  throw std::invalid_argument(entry.id + ": unknown parameter '" + name + "'");
}

void reject_unknown(const Entry& entry, const std::map<std::string, double>& params) {
  for (const auto& [name, value] : params) {
    bool known = false;
    for (const ParamSpec& p : entry.params) known = known || p.name == name;
    if (!known)
      throw std::invalid_argument(entry.id + ": unknown parameter '" + name + "'");
  }
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"perturbed-coin-em",
       "two-state unifilar model of the perturbed coin process",
       {{"eps", 0.0, 1.0, true, 0.5}}},
      {"perturbed-coin-3state",
       "three-state non-unifilar model of the same perturbed coin process",
       {{"eps", 0.0, 1.0, true, 0.5}}},
      {"rnc",
       "three-state random-noisy-copy process",
       {{"p", 0.0, 1.0, false, 0.5}, {"q", 0.0, 1.0, false, 0.7}}},
      {"rnc-merged",
       "two-state reduction of the random-noisy-copy process at q = 1",
       {{"p", 0.0, 1.0, false, 0.5}}},
      {"four-symbol", "four-state four-symbol stay-or-switch process", {}},
      {"monras-2level",
       "two-level quantum model generating the four-symbol process",
       {},
       /*is_hmm=*/false},
  };
  return all;
}

const Entry& find(const std::string& id) {
  for (const Entry& e : entries())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

Hmm perturbed_coin_em(double eps) {
  check_range(find("perturbed-coin-em"), "eps", eps);
  Hmm m;
  m.name = "perturbed-coin-em";
  m.params = {{"eps", eps}};
  m.state_labels = {"0", "1"};
  m.symbol_labels = {"0", "1"};
  m.transitions = {
      from_rows({{0.5 * (1 + eps), 0.0}, {0.5 * (1 - eps), 0.0}}),
      from_rows({{0.0, 0.5 * (1 - eps)}, {0.0, 0.5 * (1 + eps)}}),
  };
  m.initial = {0.5, 0.5};
  m.stationary_initial = true;
  return m;
}

Hmm perturbed_coin_3state(double eps) {
  check_range(find("perturbed-coin-3state"), "eps", eps);
  Hmm m;
  m.name = "perturbed-coin-3state";
  m.params = {{"eps", eps}};
  m.state_labels = {"0", "1", "2"};
  m.symbol_labels = {"0", "1"};
  m.transitions = {
      from_rows({{eps, 0.0, 1 - eps}, {0.0, 0.0, 0.0}, {eps / 2, 0.0, (1 - eps) / 2}}),
      from_rows({{0.0, 0.0, 0.0}, {0.0, eps, 1 - eps}, {0.0, eps / 2, (1 - eps) / 2}}),
  };
  m.initial = {eps / 2, eps / 2, 1 - eps};
  m.stationary_initial = true;
  m.notes.push_back(
      "not unifilar: H(mu) of this model is an internal state entropy, not the "
      "statistical complexity of the process");
  return m;
}

Hmm rnc(double p, double q) {
  const Entry& entry = find("rnc");
  check_range(entry, "p", p);
  check_range(entry, "q", q);
  Hmm m;
  m.name = "rnc";
  m.params = {{"p", p}, {"q", q}};
  m.state_labels = {"A", "B", "C"};
  m.symbol_labels = {"0", "1"};
  m.transitions = {
      from_rows({{0.0, p, 0.0}, {1.0, 0.0, 0.0}, {q, 0.0, 0.0}}),
      from_rows({{0.0, 0.0, 1 - p}, {0.0, 0.0, 0.0}, {1 - q, 0.0, 0.0}}),
  };
  m.initial = {0.5, p / 2, (1 - p) / 2};
  m.stationary_initial = true;
  return m;
}

Hmm rnc_merged(double p) {
  check_range(find("rnc-merged"), "p", p);
  Hmm m;
  m.name = "rnc-merged";
  m.params = {{"p", p}};
  m.state_labels = {"A", "BC"};
  m.symbol_labels = {"0", "1"};
  m.transitions = {
      from_rows({{0.0, p}, {1.0, 0.0}}),
      from_rows({{0.0, 1 - p}, {0.0, 0.0}}),
  };
  m.initial = {0.5, 0.5};
  m.stationary_initial = true;
  return m;
}

Hmm four_symbol() {
  Hmm m;
  m.name = "four-symbol";
  m.state_labels = {"U", "D", "R", "L"};
  m.symbol_labels = {"0", "1", "2", "3"};
  m.transitions = {
      from_rows({{0.5, 0, 0, 0}, {0, 0, 0, 0}, {0.25, 0, 0, 0}, {0.25, 0, 0, 0}}),
      from_rows({{0, 0, 0, 0}, {0, 0.5, 0, 0}, {0, 0.25, 0, 0}, {0, 0.25, 0, 0}}),
      from_rows({{0, 0, 0.25, 0}, {0, 0, 0.25, 0}, {0, 0, 0.5, 0}, {0, 0, 0, 0}}),
      from_rows({{0, 0, 0, 0.25}, {0, 0, 0, 0.25}, {0, 0, 0, 0}, {0, 0, 0, 0.5}}),
  };
  m.initial = {0.25, 0.25, 0.25, 0.25};
  m.stationary_initial = true;
  return m;
}

GenericHqmm monras_2level() {
  GenericHqmm h;
  h.dim = 2;
  h.name = "monras-2level";
  h.symbol_labels = {"0", "1", "2", "3"};
  const double s = 1.0 / std::sqrt(2.0);

  auto projector_scaled = [&](double a, double b) {
    // (1/sqrt2) |v><v| for the real unit vector (a, b)
    CMatrix k(2, 2);
    k(0, 0) = s * a * a;
    k(0, 1) = s * a * b;
    k(1, 0) = s * b * a;
    k(1, 1) = s * b * b;
    return k;
  };
  h.kraus = {
      {projector_scaled(1.0, 0.0)},   // up
      {projector_scaled(0.0, 1.0)},   // down
      {projector_scaled(s, s)},       // plus
      {projector_scaled(s, -s)},      // minus
  };
  h.rho = CMatrix(2, 2);
  h.rho(0, 0) = 0.5;
  h.rho(1, 1) = 0.5;
  return h;
}

Hmm build_hmm(const std::string& id, const std::map<std::string, double>& params) {
  const Entry& entry = find(id);
  if (!entry.is_hmm)
    throw std::invalid_argument(id + " is a quantum model, not an HMM");
  reject_unknown(entry, params);
  if (id == "perturbed-coin-em") return perturbed_coin_em(take_param(entry, params, "eps"));
  if (id == "perturbed-coin-3state")
    return perturbed_coin_3state(take_param(entry, params, "eps"));
  if (id == "rnc")
    return rnc(take_param(entry, params, "p"), take_param(entry, params, "q"));
  if (id == "rnc-merged") return rnc_merged(take_param(entry, params, "p"));
  if (id == "four-symbol") return four_symbol();
  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

GenericHqmm build_hqmm(const std::string& id,
                       const std::map<std::string, double>& params) {
  const Entry& entry = find(id);
  if (entry.is_hmm)
    throw std::invalid_argument(id + " is an HMM; load it without --quantum-file");
  reject_unknown(entry, params);
  return monras_2level();
}

}  // namespace hqmm::catalog
