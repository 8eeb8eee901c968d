#include "darp/oracle.hpp"

#include <limits>
#include <vector>

#include "darp/schedule.hpp"

namespace darp {

namespace {

struct BestRoute {
  bool feasible = false;
  Minutes cost = std::numeric_limits<double>::infinity();
  std::vector<int> visits;
};

// Builds every interleaving of the requests in `mask` in which each pickup
// comes before its dropoff, and keeps the cheapest feasible one.
class OrderEnumerator {
 public:
  OrderEnumerator(const Instance& inst, std::uint64_t& explored) : inst_(inst), explored_(explored) {}

  BestRoute best_for(unsigned mask) {
    best_ = BestRoute{};
    mask_ = mask;
    order_.clear();
    extend(0, 0);
    return best_;
  }

 private:
  void extend(unsigned picked, unsigned dropped) {
    if (dropped == mask_) {
      ++explored_;
      const Schedule s = evaluate_route(inst_, order_);
      if (s.feasible() && s.travel_cost < best_.cost) best_ = BestRoute{true, s.travel_cost, order_};
      return;
    }
    const int n = inst_.requests();
    for (int i = 1; i <= n; ++i) {
      const unsigned bit = 1u << (i - 1);
      if (!(mask_ & bit)) continue;
      if (!(picked & bit)) {
        order_.push_back(inst_.pickup(i));
        extend(picked | bit, dropped);
        order_.pop_back();
      } else if (!(dropped & bit)) {
        order_.push_back(inst_.dropoff(i));
        extend(picked, dropped | bit);
        order_.pop_back();
      }
    }
  }

  const Instance& inst_;
  std::uint64_t& explored_;
  unsigned mask_ = 0;
  std::vector<int> order_;
  BestRoute best_;
};

}  // namespace

OracleResult exact_solve(const Instance& inst) {
  const int n = inst.requests();
  const int m = inst.vehicles();
  if (n > kOracleMaxRequests || m > kOracleMaxVehicles)
    throw OracleSizeError("exact search is limited to " + std::to_string(kOracleMaxRequests) + " requests and " +
                          std::to_string(kOracleMaxVehicles) + " vehicles (instance has " + std::to_string(n) +
                          " and " + std::to_string(m) + ")");

  OracleResult result;
  result.optimal_solution = Solution(inst);
  const unsigned full = (1u << n) - 1u;

  // Vehicles are identical, so the best route for a request set does not
  // depend on which vehicle drives it.
  std::vector<BestRoute> best(static_cast<std::size_t>(full) + 1);
  OrderEnumerator enumerate(inst, result.explored);
  for (unsigned mask = 0; mask <= full; ++mask) best[mask] = enumerate.best_for(mask);

  unsigned first_set = full;
  Minutes optimum = std::numeric_limits<double>::infinity();
  bool found = false;
  if (m == 1) {
    found = best[full].feasible;
    optimum = best[full].cost;
  } else {
    for (unsigned mask = 0; mask <= full; ++mask) {
      const BestRoute& a = best[mask];
      const BestRoute& b = best[full & ~mask];
      if (!a.feasible || !b.feasible) continue;
      if (a.cost + b.cost < optimum) {
        optimum = a.cost + b.cost;
        first_set = mask;
        found = true;
      }
    }
  }
  if (!found) return result;

  std::vector<Route> routes(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) routes[static_cast<std::size_t>(k)].vehicle = k;
  routes[0].visits = best[first_set].visits;
  if (m == 2) routes[1].visits = best[full & ~first_set].visits;
  result.optimal_solution = Solution(inst, std::move(routes));
  result.optimal_cost = result.optimal_solution.cost();
  return result;
}

}  // namespace darp
