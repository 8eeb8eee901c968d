#pragma once

// Instance generators for tests. None of this is part of the solver.

#include <cstdint>
#include <vector>

#include "darp/instance.hpp"
#include "darp/mata.hpp"

namespace darp::testing {

/// Depot at the origin, request ends uniform in [-10, 10]^2, one tight
/// 15-minute window per request (dropoff side for the first half, pickup side
/// for the second), Q = 6, L = 90, T = 480, horizon [0, 1440].
Instance benchmark_like_instance(int n, int m, std::uint64_t seed);

/// Tiny instance built around a hidden feasible schedule, so a feasible
/// complete solution is known to exist. Windows are a random mix of narrow
/// windows around the hidden begin times and horizon-wide ones.
Instance planted_instance(int n, int m, std::uint64_t seed);

struct RouteCase {
  Instance instance;
  std::vector<int> visits;
};

/// A single-vehicle instance with 1-3 requests and one visit order for all of
/// them. Windows and the ride bound are perturbed away from a hidden feasible
/// schedule, so roughly half of the cases are infeasible. The instance is
/// already time-window adjusted.
RouteCase random_route_case(std::uint64_t seed);

/// Uniformly chosen visit order for `requests` with every pickup before its
/// dropoff.
std::vector<int> random_interleaving(const std::vector<int>& requests, int n, Rng& rng);

/// Single request: depot (0,0), pickup (3,0), dropoff (6,0), windows [0,100],
/// no service time, Q = 6, L = 90, T = 480, one vehicle.
Instance toy_single_request();

/// Two requests on a line that share one vehicle comfortably; the optimum
/// visits both pickups, then both dropoffs.
Instance toy_two_requests();

/// Two requests where ranking pickup positions by detour alone hides the
/// optimal visit order from best insertion.
Instance toy_detour_trap();

}  // namespace darp::testing
