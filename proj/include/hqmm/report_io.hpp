#pragma once

#include <string>

#include "hqmm/classifier.hpp"

namespace hqmm {

// Stable machine-readable rendering (key order fixed) and an aligned
// plain-text rendering of the same report.
std::string report_to_json(const AnalysisReport& rep);
std::string report_to_text(const AnalysisReport& rep);

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double x);

}  // namespace hqmm
