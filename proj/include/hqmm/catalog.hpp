#pragma once

#include <map>
#include <string>
#include <vector>

#include "hqmm/hmm.hpp"
#include "hqmm/quantum.hpp"

namespace hqmm::catalog {

struct ParamSpec {
  std::string name;
  double lo = 0.0, hi = 1.0;
  bool lo_open = false;  // lo itself excluded
  double default_value = 0.5;
};

struct Entry {
  std::string id;
  std::string summary;
  std::vector<ParamSpec> params;
  bool is_hmm = true;  // false: generic quantum model (two-level entry)
};

const std::vector<Entry>& entries();
const Entry& find(const std::string& id);  // throws std::invalid_argument

// Builders with the exact matrices; distributions attached where known in
// closed form, otherwise computed.
Hmm perturbed_coin_em(double eps);
Hmm perturbed_coin_3state(double eps);
Hmm rnc(double p, double q);
Hmm rnc_merged(double p);
Hmm four_symbol();
GenericHqmm monras_2level();

// Range-checked dispatch; missing parameters take their defaults.
Hmm build_hmm(const std::string& id, const std::map<std::string, double>& params);
GenericHqmm build_hqmm(const std::string& id,
                       const std::map<std::string, double>& params);

}  // namespace hqmm::catalog
