#include "darp/solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace darp {

Solution::Solution(const Instance& inst)
    : routes_(static_cast<std::size_t>(inst.vehicles())),
      route_cost_(static_cast<std::size_t>(inst.vehicles()), 0.0),
      route_of_(static_cast<std::size_t>(inst.requests()) + 1, -1) {
  for (std::size_t k = 0; k < routes_.size(); ++k) routes_[k].vehicle = static_cast<int>(k);
}

Solution::Solution(const Instance& inst, std::vector<Route> routes)
    : routes_(std::move(routes)),
      route_cost_(routes_.size(), 0.0),
      route_of_(static_cast<std::size_t>(inst.requests()) + 1, -1) {
  for (std::size_t k = 0; k < routes_.size(); ++k) {
    for (int v : routes_[k].visits) {
      if (inst.is_pickup(v)) route_of_[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    refresh_route_cost(inst, static_cast<int>(k));
  }
  served_ = static_cast<int>(std::count_if(route_of_.begin() + 1, route_of_.end(), [](int r) { return r >= 0; }));
}

std::vector<int> Solution::unserved() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < route_of_.size(); ++i) {
    if (route_of_[i] < 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

void Solution::insert(const Instance& inst, int request, const Placement& placement) {
  if (serves(request)) throw std::logic_error("request " + std::to_string(request) + " is already served");
  auto& visits = routes_[static_cast<std::size_t>(placement.route)].visits;
  visits.insert(visits.begin() + (placement.pickup_position - 1), inst.pickup(request));
  visits.insert(visits.begin() + (placement.dropoff_position - 1), inst.dropoff(request));
  route_of_[static_cast<std::size_t>(request)] = placement.route;
  ++served_;
  refresh_route_cost(inst, placement.route);
}

void Solution::remove(const Instance& inst, int request) {
  const int k = route_of(request);
  if (k < 0) return;
  auto& visits = routes_[static_cast<std::size_t>(k)].visits;
  std::erase_if(visits, [&](int v) { return v == inst.pickup(request) || v == inst.dropoff(request); });
  route_of_[static_cast<std::size_t>(request)] = -1;
  --served_;
  refresh_route_cost(inst, k);
}

void Solution::refresh_route_cost(const Instance& inst, int k) {
  route_cost_[static_cast<std::size_t>(k)] = route_travel_cost(inst, routes_[static_cast<std::size_t>(k)].visits);
  cost_ = 0.0;
  for (double c : route_cost_) cost_ += c;
}

bool operator==(const Solution& a, const Solution& b) {
  return a.routes_ == b.routes_ && a.route_of_ == b.route_of_;
}

Minutes cost(const Instance& inst, const Solution& solution) {
  Minutes total = 0.0;
  for (const Route& r : solution.routes()) total += route_travel_cost(inst, r.visits);
  return total;
}

Violations violations(const Instance& inst, const Solution& solution) {
  Violations total;
  for (const Route& r : solution.routes()) total += evaluate_route(inst, r.visits).violations;
  return total;
}

}  // namespace darp
