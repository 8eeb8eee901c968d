#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "darp/instance.hpp"
#include "darp/solution.hpp"

namespace darp {

inline constexpr int kOracleMaxRequests = 5;
inline constexpr int kOracleMaxVehicles = 2;

class OracleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  /// Absent when no feasible complete solution exists.
  std::optional<Minutes> optimal_cost;
  Solution optimal_solution;
  /// Visit orders evaluated.
  std::uint64_t explored = 0;
};

/// Exhaustive search over every assignment of requests to vehicles and every
/// precedence-respecting visit order. Each order is scheduled with
/// evaluate_route. Limited to n <= 5 and m <= 2.
OracleResult exact_solve(const Instance& inst);

}  // namespace darp
