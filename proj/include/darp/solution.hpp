#pragma once

#include <vector>

#include "darp/instance.hpp"
#include "darp/schedule.hpp"

namespace darp {

struct Route {
  int vehicle = 0;
  /// Pickup and dropoff vertex ids in visiting order; the depot is implicit.
  std::vector<int> visits;
};

/// Where best_insertion puts a request. Positions are indices in the route
/// after insertion, counting the start depot as position 0.
struct Placement {
  int route = 0;
  int pickup_position = 0;
  int dropoff_position = 0;
  Minutes cost_increase = 0.0;
};

/// m routes plus the requests left unserved. Travel cost and served count are
/// cached and kept current by insert/remove.
class Solution {
 public:
  Solution() = default;
  /// Empty solution: every route empty, every request unserved.
  explicit Solution(const Instance& inst);
  /// Adopts routes as given (e.g. read from a file). Nothing is validated;
  /// requests that appear in no route count as unserved.
  Solution(const Instance& inst, std::vector<Route> routes);

  const std::vector<Route>& routes() const { return routes_; }
  const Route& route(int k) const { return routes_[static_cast<std::size_t>(k)]; }
  int request_count() const { return static_cast<int>(route_of_.size()) - 1; }

  Minutes cost() const { return cost_; }
  int served() const { return served_; }
  bool serves(int request) const { return route_of_[static_cast<std::size_t>(request)] >= 0; }
  /// Route index serving `request`, or -1.
  int route_of(int request) const { return route_of_[static_cast<std::size_t>(request)]; }
  /// Unserved request indices, ascending.
  std::vector<int> unserved() const;
  bool complete() const { return served_ == request_count(); }

  void insert(const Instance& inst, int request, const Placement& placement);
  /// Removes both vertices of `request`; a no-op when it is unserved.
  void remove(const Instance& inst, int request);

  friend bool operator==(const Solution& a, const Solution& b);

 private:
  void refresh_route_cost(const Instance& inst, int k);

  std::vector<Route> routes_;
  std::vector<Minutes> route_cost_;
  std::vector<int> route_of_;
  Minutes cost_ = 0.0;
  int served_ = 0;
};

inline bool operator==(const Route& a, const Route& b) {
  return a.vehicle == b.vehicle && a.visits == b.visits;
}

/// f(x): total travel time over all routes, depot legs included. Computed from
/// scratch, independently of the cached value.
Minutes cost(const Instance& inst, const Solution& solution);

/// Sum of the per-route violations. Throws StructureError on malformed routes.
Violations violations(const Instance& inst, const Solution& solution);

inline bool is_complete(const Solution& solution) { return solution.complete(); }

}  // namespace darp
