#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "darp/instance.hpp"
#include "darp/solution.hpp"

namespace darp {

// Text format:
//
//   cost 190.02
//   unserved 4 17          (or "unserved -")
//   route 0: 5@93.125 29@104.871 ...
//
// Begin-of-service times are informational; loading a solution re-evaluates
// the schedule.

struct SolutionFile {
  Minutes cost = 0.0;
  std::vector<int> unserved;
  std::vector<Route> routes;
};

std::string format_solution(const Instance& inst, const Solution& solution);

/// Throws ParseError (with line numbers) on malformed input. Does not check
/// the routes against an instance.
SolutionFile parse_solution(std::string_view text);

SolutionFile load_solution(const std::string& path);

/// Shortest decimal text that reads back as the same double.
std::string exact_decimal(double value);

}  // namespace darp
