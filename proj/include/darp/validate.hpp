#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darp/instance.hpp"
#include "darp/schedule.hpp"
#include "darp/solution.hpp"

namespace darp {

// Independent checker for solutions and schedules. Nothing in here calls the
// eight-step machinery except to obtain the schedule that is being checked.

struct ValidationReport {
  std::vector<std::string> structural_errors;
  /// Places where the fast evaluator and the independent recomputation differ.
  std::vector<std::string> disagreements;
  /// Violations recomputed from scratch for structurally sound routes.
  Violations violations;
  Minutes cost = 0.0;
  int served = 0;
  bool complete = false;

  /// No structural errors, no disagreements, zero violations, all served.
  bool clean() const;
  std::string to_string() const;
};

/// Recomputes structure, cost, schedule and violations of `solution` and
/// compares them with the fast evaluator and the cached cost.
ValidationReport validate(const Instance& inst, const Solution& solution);

/// Same check for raw routes plus the cost and unserved set a file claims.
ValidationReport validate(const Instance& inst, std::span<const Route> routes, Minutes claimed_cost,
                          std::span<const int> claimed_unserved);

/// Violations of a fully specified schedule (one begin-of-service time per
/// visit). Returns nullopt if the times are not a consistent schedule: a begin
/// before the window opens, or before the vehicle can get there.
std::optional<Violations> schedule_violations(const Instance& inst, std::span<const int> visits,
                                              Minutes depot_departure, std::span<const Minutes> begin_times);

/// Plain forward simulation: leave the depot at `depot_departure`, begin
/// service as soon as the window allows, plus `extra_wait[p]` minutes of
/// deliberate waiting at visit p (empty span = none). Fills `begin_times`.
Violations simulate_route(const Instance& inst, std::span<const int> visits, Minutes depot_departure,
                          std::span<const Minutes> extra_wait, std::vector<Minutes>& begin_times);

/// Tries every depot departure on a `step`-minute grid (both ends of the
/// useful range included) with no other deliberate waiting. Returns the first
/// departure that yields zero violations.
std::optional<Minutes> depot_departure_search(const Instance& inst, std::span<const int> visits,
                                              Minutes step = 0.1);

/// Exhaustive grid search over depot departure and the deliberate wait at
/// each later pickup. Exponential in the number of pickups; intended for
/// routes of a handful of visits.
bool grid_schedule_search(const Instance& inst, std::span<const int> visits, Minutes step = 0.1);

}  // namespace darp
