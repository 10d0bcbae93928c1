#pragma once

#include <string>

#include "hqmm/hmm.hpp"
#include "hqmm/quantum.hpp"

namespace hqmm {

// Model files are JSON. An HMM file carries name/symbols/states/transitions
// and an optional initial distribution (computed as stationary when absent);
// a quantum model file carries dimension/symbols/kraus/rho with [re, im]
// entry pairs. Malformed input throws std::invalid_argument.
bool is_hqmm_file(const std::string& path);

Hmm load_hmm(const std::string& path);
GenericHqmm load_hqmm(const std::string& path);

std::string hmm_to_json(const Hmm& model);
std::string hqmm_to_json(const GenericHqmm& h);

}  // namespace hqmm
