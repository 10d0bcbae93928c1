#include "hqmm/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace hqmm {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read model file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("model file '" + path + "' is not valid JSON: " +
                                e.what());
  }
  return j;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("model file: missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& item : j[key]) out.push_back(item.get<std::string>());
  return out;
}

Matrix read_matrix(const json& j, int n, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("model file: " + what + " is not a " +
                                std::to_string(n) + "-row matrix");
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("model file: " + what + " row " + std::to_string(i) +
                                  " has the wrong length");
    for (int c = 0; c < n; ++c) a(i, c) = j[i][c].get<double>();
  }
  return a;
}

CMatrix read_cmatrix(const json& j, int d, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw std::invalid_argument("model file: " + what + " is not a " +
                                std::to_string(d) + "-row matrix");
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != d)
      throw std::invalid_argument("model file: " + what + " row " + std::to_string(i) +
                                  " has the wrong length");
    for (int c = 0; c < d; ++c) {
      const auto& cell = j[i][c];
      if (!cell.is_array() || cell.size() != 2)
        throw std::invalid_argument("model file: " + what +
                                    " entries must be [re, im] pairs");
      a(i, c) = {cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  return a;
}

}  // namespace

bool is_hqmm_file(const std::string& path) { return read_file(path).contains("kraus"); }

Hmm load_hmm(const std::string& path) {
  const json j = read_file(path);
  Hmm m;
  m.name = j.value("name", path);
  m.symbol_labels = string_list(j, "symbols");
  m.state_labels = string_list(j, "states");
  const int n = m.state_count();

  if (!j.contains("transitions") || !j["transitions"].is_object())
    throw std::invalid_argument("model file: missing object 'transitions'");
  for (const std::string& label : m.symbol_labels) {
    if (!j["transitions"].contains(label))
      throw std::invalid_argument("model file: no transition matrix for symbol '" +
                                  label + "'");
    m.transitions.push_back(read_matrix(j["transitions"][label], n, "T[" + label + "]"));
  }

  if (j.contains("initial")) {
    if (!j["initial"].is_array() || static_cast<int>(j["initial"].size()) != n)
      throw std::invalid_argument("model file: 'initial' has the wrong length");
    for (const auto& x : j["initial"]) m.initial.push_back(x.get<double>());
    m.stationary_initial = false;
  } else {
    m.initial = stationary_distribution(m);
    m.stationary_initial = true;
  }
  return m;
}

GenericHqmm load_hqmm(const std::string& path) {
  const json j = read_file(path);
  GenericHqmm h;
  h.name = j.value("name", path);
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw std::invalid_argument("model file: missing integer 'dimension'");
  h.dim = j["dimension"].get<int>();
  h.symbol_labels = string_list(j, "symbols");

  if (!j.contains("kraus") || !j["kraus"].is_object())
    throw std::invalid_argument("model file: missing object 'kraus'");
  for (const std::string& label : h.symbol_labels) {
    if (!j["kraus"].contains(label))
      throw std::invalid_argument("model file: no operators for symbol '" + label + "'");
    std::vector<CMatrix> ops;
    for (const auto& op : j["kraus"][label])
      ops.push_back(read_cmatrix(op, h.dim, "kraus[" + label + "]"));
    h.kraus.push_back(std::move(ops));
  }
  if (!j.contains("rho"))
    throw std::invalid_argument("model file: missing matrix 'rho'");
  h.rho = read_cmatrix(j["rho"], h.dim, "rho");
  check_generic_hqmm(h);
  return h;
}

std::string hmm_to_json(const Hmm& model) {
  ordered j;
  j["name"] = model.name;
  j["symbols"] = model.symbol_labels;
  j["states"] = model.state_labels;
  ordered transitions;
  const int n = model.state_count();
  for (int r = 0; r < model.symbol_count(); ++r) {
    ordered rows = ordered::array();
    for (int i = 0; i < n; ++i) {
      ordered row = ordered::array();
      for (int c = 0; c < n; ++c) row.push_back(model.transitions[r](i, c));
      rows.push_back(std::move(row));
    }
    transitions[model.symbol_labels[r]] = std::move(rows);
  }
  j["transitions"] = std::move(transitions);
  j["initial"] = model.initial;
  return j.dump(2) + "\n";
}

std::string hqmm_to_json(const GenericHqmm& h) {
  ordered j;
  j["name"] = h.name;
  j["dimension"] = h.dim;
  j["symbols"] = h.symbol_labels;
  auto cmatrix = [](const CMatrix& a) {
    ordered rows = ordered::array();
    for (int i = 0; i < a.rows(); ++i) {
      ordered row = ordered::array();
      for (int c = 0; c < a.cols(); ++c)
        row.push_back(ordered::array({a(i, c).real(), a(i, c).imag()}));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  ordered kraus;
  for (int r = 0; r < h.symbol_count(); ++r) {
    ordered ops = ordered::array();
    for (const CMatrix& k : h.kraus[r]) ops.push_back(cmatrix(k));
    kraus[h.symbol_labels[r]] = std::move(ops);
  }
  j["kraus"] = std::move(kraus);
  j["rho"] = cmatrix(h.rho);
  return j.dump(2) + "\n";
}

}  // namespace hqmm
