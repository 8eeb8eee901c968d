#include <algorithm>
#include <limits>
#include <numeric>

#include "darp/oracle.hpp"
#include "darp/schedule.hpp"
#include "darp/validate.hpp"
#include "doctest.h"
#include "random_instances.hpp"

using namespace darp;

namespace {

// Cheapest feasible single-vehicle order, by filtering all permutations.
std::optional<double> brute_force_one_vehicle(const Instance& inst, int& orders) {
  const int n = inst.requests();
  std::vector<int> visits(static_cast<std::size_t>(2 * n));
  std::iota(visits.begin(), visits.end(), 1);
  std::optional<double> best;
  orders = 0;
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const auto p = std::find(visits.begin(), visits.end(), i);
      const auto d = std::find(visits.begin(), visits.end(), i + n);
      ok = p < d;
    }
    if (!ok) continue;
    ++orders;
    const Schedule s = evaluate_route(inst, visits);
    if (s.feasible() && (!best || s.travel_cost < *best)) best = s.travel_cost;
  } while (std::next_permutation(visits.begin(), visits.end()));
  return best;
}

// Same instance with requests renumbered by `perm` (perm[old-1] = new).
Instance relabel(const Instance& inst, const std::vector<int>& perm) {
  const int n = inst.requests();
  std::vector<Vertex> v = inst.vertices();
  std::vector<Vertex> out(v.size());
  out[0] = v[0];
  for (int i = 1; i <= n; ++i) {
    const int j = perm[static_cast<std::size_t>(i - 1)];
    out[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(j + n)] = v[static_cast<std::size_t>(i + n)];
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].id = static_cast<int>(k);
  return Instance(inst.vehicles(), inst.capacity(), inst.route_duration_bound(), inst.ride_time_bound(), out);
}

}  // namespace

TEST_CASE("oracle on an instance without requests") {
  std::vector<Vertex> v(1);
  v[0].window_close = 480;
  const OracleResult r = exact_solve(Instance(1, 6, 480, 90, v));
  REQUIRE(r.optimal_cost.has_value());
  CHECK(*r.optimal_cost == 0.0);
}

TEST_CASE("oracle on the single-request toy") {
  const Instance inst = testing::toy_single_request();
  const OracleResult r = exact_solve(inst);
  REQUIRE(r.optimal_cost.has_value());
  CHECK(*r.optimal_cost == 12.0);
  CHECK(r.optimal_solution.route(0).visits == std::vector<int>{1, 2});
  CHECK(validate(inst, r.optimal_solution).clean());
}

TEST_CASE("oracle matches a permutation filter on three requests") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = testing::planted_instance(3, 1, seed);
    int orders = 0;
    const auto brute = brute_force_one_vehicle(inst, orders);
    CHECK(orders == 90);
    const OracleResult r = exact_solve(inst);
    REQUIRE(brute.has_value() == r.optimal_cost.has_value());
    if (brute) {
      CHECK(*r.optimal_cost == doctest::Approx(*brute).epsilon(1e-12));
      CHECK(validate(inst, r.optimal_solution).clean());
    }
  }
}

TEST_CASE("oracle optimum is invariant under request relabeling") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = testing::planted_instance(4, 2, seed);
    const Instance swapped = relabel(inst, {3, 1, 4, 2});
    const OracleResult a = exact_solve(inst);
    const OracleResult b = exact_solve(swapped);
    REQUIRE(a.optimal_cost.has_value());
    REQUIRE(b.optimal_cost.has_value());
    CHECK(*a.optimal_cost == doctest::Approx(*b.optimal_cost).epsilon(1e-12));
  }
}

TEST_CASE("a second vehicle never makes the optimum worse") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance one = testing::planted_instance(3, 1, seed);
    const Instance two(2, one.capacity(), one.route_duration_bound(), one.ride_time_bound(), one.vertices());
    const OracleResult a = exact_solve(one);
    const OracleResult b = exact_solve(two);
    REQUIRE(a.optimal_cost.has_value());
    REQUIRE(b.optimal_cost.has_value());
    CHECK(*b.optimal_cost <= *a.optimal_cost + 1e-9);
    CHECK(validate(two, b.optimal_solution).clean());
  }
}

TEST_CASE("oracle refuses large instances") {
  CHECK_THROWS_AS(exact_solve(testing::benchmark_like_instance(6, 1, 1)), OracleSizeError);
  CHECK_THROWS_AS(exact_solve(testing::benchmark_like_instance(3, 3, 1)), OracleSizeError);
  CHECK_THROWS_AS(exact_solve(testing::benchmark_like_instance(24, 3, 1)), OracleSizeError);
}
