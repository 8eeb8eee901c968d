#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "darp/instance.hpp"

namespace darp {

/// Violation of the route-structure invariants (pairing, precedence, vertex ids).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Amounts by which the load, duration, time-window and ride-time limits are
/// exceeded. Load in passengers, the rest in minutes.
struct Violations {
  double load = 0.0;
  double duration = 0.0;
  double time_window = 0.0;
  double ride_time = 0.0;

  Violations& operator+=(const Violations& o) {
    load += o.load;
    duration += o.duration;
    time_window += o.time_window;
    ride_time += o.ride_time;
    return *this;
  }
  friend bool operator==(const Violations&, const Violations&) = default;
};

/// Timing of one visited vertex.
struct Stop {
  int vertex = 0;
  Minutes arrival = 0.0;
  Minutes begin = 0.0;
  Minutes wait = 0.0;
  Minutes departure = 0.0;
  int load_after = 0;
};

struct RideTime {
  int request = 0;
  Minutes ride = 0.0;
};

/// Schedule of one route. `stops` holds the visited pickups and dropoffs in
/// route order; the depot legs are summarised by depot_departure and
/// depot_return.
struct Schedule {
  std::vector<Stop> stops;
  Minutes depot_departure = 0.0;
  Minutes depot_return = 0.0;
  std::vector<RideTime> rides;
  Minutes duration = 0.0;
  int max_load = 0;
  Minutes travel_cost = 0.0;
  Violations violations;

  bool feasible() const;
};

/// Travel time of depot -> visits -> depot.
Minutes route_travel_cost(const Instance& inst, std::span<const int> visits);

/// Throws StructureError unless every vertex id is a request vertex, each
/// request appears with both vertices exactly once, and pickups precede their
/// dropoffs.
void check_route_structure(const Instance& inst, std::span<const int> visits);

/// Schedules `visits` with the eight-step forward-time-slack scheme and reports
/// the resulting violations:
///
///   1. leave the depot at its earliest time
///   2. forward pass: arrival, begin of service, wait, departure
///   3. forward time slack of the depot
///   4. delay the depot departure by min(slack, total waiting)
///   5. forward pass again
///   6. ride times
///   7. for each pickup in order, delay it by min(its slack, downstream
///      waiting) and propagate; the slack of a pickup guards the ride times
///      of passengers already on board
///   8. duration, loads and violations
Schedule evaluate_route(const Instance& inst, std::span<const int> visits);

namespace detail {

/// Per-position buffers of the eight-step scheme. Position 0 is the start
/// depot, positions 1..k the visits and k+1 the return to the depot.
struct ScheduleWork {
  std::vector<int> node;
  std::vector<int> pickup_position;  // for dropoffs; -1 elsewhere
  std::vector<double> arrival, begin, wait, departure;

  void load(const Instance& inst, std::span<const int> visits);
  void forward_from(const Instance& inst, std::size_t position);
  double forward_slack(const Instance& inst, std::size_t position) const;
  /// Steps 3-7. Assumes load() and a forward pass from position 1.
  void optimise(const Instance& inst);
  Violations violations(const Instance& inst, int* max_load = nullptr) const;
};

}  // namespace detail

/// Hot-path variant used by insertion: reuses buffers between calls and stops
/// early once a violation is certain. Only feasibility and travel cost are
/// reported.
class RouteChecker {
 public:
  enum class Verdict { kFeasible, kInfeasible };

  struct Result {
    Verdict verdict = Verdict::kInfeasible;
    /// Position (0-based in visits) of the first stop that can never be
    /// served in time or within capacity, or -1 if no such stop exists.
    /// Extending the route past this stop cannot fix it.
    int blocking_position = -1;
  };

  explicit RouteChecker(const Instance& inst) : inst_(&inst) {}

  /// `visits` must be structurally valid; this is not checked.
  Result check(std::span<const int> visits);

 private:
  const Instance* inst_;
  detail::ScheduleWork work_;
};

/// True iff all four violations are exactly zero.
inline bool is_feasible(const Violations& v) {
  return v.load == 0.0 && v.duration == 0.0 && v.time_window == 0.0 && v.ride_time == 0.0;
}

}  // namespace darp
