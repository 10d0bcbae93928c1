#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqmm {

// Default tolerances. Stochasticity checks get headroom over double
// roundoff; structural zero tests are close to exact.
inline constexpr double kStochTol = 1e-9;
inline constexpr double kZeroTol = 1e-12;
inline constexpr double kEigTol = 1e-12;

// Cap on m^L before pruning when enumerating length-L words.
inline constexpr std::size_t kWordBudget = std::size_t{1} << 22;

enum class LogBase { two, e };

inline double log_divisor(LogBase base) {
  return base == LogBase::two ? std::log(2.0) : 1.0;
}

inline const char* log_base_name(LogBase base) {
  return base == LogBase::two ? "2" : "e";
}

// -x ln x with the 0 log 0 = 0 convention (natural log; callers rescale).
inline double eta(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

// A model failed its invariants (bad input).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Computed quantities contradict a structural fact (signals a bug, not bad input).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested enumeration exceeds the configured budget.
struct BudgetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hqmm
