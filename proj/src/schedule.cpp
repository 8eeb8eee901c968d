#include "darp/schedule.hpp"

#include <algorithm>
#include <limits>

namespace darp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double excess(double value, double limit) {
  const double over = value - limit;
  return over > kEpsilon ? over : 0.0;
}

}  // namespace

bool Schedule::feasible() const { return is_feasible(violations); }

Minutes route_travel_cost(const Instance& inst, std::span<const int> visits) {
  Minutes cost = 0.0;
  int prev = 0;
  for (int v : visits) {
    cost += inst.travel(prev, v);
    prev = v;
  }
  return cost + inst.travel(prev, 0);
}

void check_route_structure(const Instance& inst, std::span<const int> visits) {
  const int n = inst.requests();
  std::vector<int> seen(static_cast<std::size_t>(2 * n + 1), 0);
  for (std::size_t pos = 0; pos < visits.size(); ++pos) {
    const int v = visits[pos];
    if (v < 1 || v > 2 * n)
      throw StructureError("vertex " + std::to_string(v) + " at position " + std::to_string(pos + 1) +
                           " is not a request vertex");
    if (seen[static_cast<std::size_t>(v)]++)
      throw StructureError("vertex " + std::to_string(v) + " is visited more than once");
    if (inst.is_dropoff(v) && !seen[static_cast<std::size_t>(v - n)])
      throw StructureError("dropoff " + std::to_string(v) + " of request " + std::to_string(v - n) +
                           " is visited before its pickup");
  }
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)] && !seen[static_cast<std::size_t>(i + n)])
      throw StructureError("request " + std::to_string(i) + " is picked up but never dropped off");
  }
}

namespace detail {

void ScheduleWork::load(const Instance& inst, std::span<const int> visits) {
  const std::size_t size = visits.size() + 2;
  node.assign(size, 0);
  pickup_position.assign(size, -1);
  arrival.assign(size, 0.0);
  begin.assign(size, 0.0);
  wait.assign(size, 0.0);
  departure.assign(size, 0.0);
  std::copy(visits.begin(), visits.end(), node.begin() + 1);
  for (std::size_t p = 1; p + 1 < size; ++p) {
    if (!inst.is_dropoff(node[p])) continue;
    const int pickup = node[p] - inst.requests();
    for (std::size_t q = 1; q < p; ++q) {
      if (node[q] == pickup) {
        pickup_position[p] = static_cast<int>(q);
        break;
      }
    }
  }
  const double start = inst.depot().window_open;
  arrival[0] = begin[0] = departure[0] = start;
}

void ScheduleWork::forward_from(const Instance& inst, std::size_t position) {
  const std::size_t last = node.size() - 1;
  for (std::size_t p = position; p <= last; ++p) {
    const Vertex& v = inst.vertex(node[p]);
    arrival[p] = departure[p - 1] + inst.travel(node[p - 1], node[p]);
    begin[p] = p == last ? arrival[p] : std::max(v.window_open, arrival[p]);
    wait[p] = begin[p] - arrival[p];
    departure[p] = begin[p] + (p == last ? 0.0 : v.service_duration);
  }
}

double ScheduleWork::forward_slack(const Instance& inst, std::size_t position) const {
  const std::size_t last = node.size() - 1;
  const double ride_bound = inst.ride_time_bound();
  double waits = 0.0;
  double slack = kInf;
  for (std::size_t h = position; h < last; ++h) {
    if (h > position) waits += wait[h];
    if (h == 0) continue;
    double room = inst.vertex(node[h]).window_close - begin[h];
    const int origin = pickup_position[h];
    if (origin >= 0 && static_cast<std::size_t>(origin) < position)
      room = std::min(room, ride_bound - (begin[h] - departure[static_cast<std::size_t>(origin)]));
    slack = std::min(slack, waits + std::max(0.0, room));
  }
  return slack;
}

void ScheduleWork::optimise(const Instance& inst) {
  const std::size_t last = node.size() - 1;

  // Delay the depot departure as far as the windows allow, using up waiting.
  double total_wait = 0.0;
  for (std::size_t p = 1; p <= last; ++p) total_wait += wait[p];
  const double depot_delay = std::min(forward_slack(inst, 0), total_wait);
  if (depot_delay > 0.0) {
    departure[0] += depot_delay;
    arrival[0] = begin[0] = departure[0];
    forward_from(inst, 1);
  }

  // Push each pickup later to shorten its own ride without hurting anyone on board.
  for (std::size_t j = 1; j < last; ++j) {
    if (!inst.is_pickup(node[j])) continue;
    double downstream_wait = 0.0;
    for (std::size_t p = j + 1; p <= last; ++p) downstream_wait += wait[p];
    if (downstream_wait <= 0.0) continue;
    const double delay = std::min(forward_slack(inst, j), downstream_wait);
    if (delay <= 0.0) continue;
    wait[j] += delay;
    begin[j] = arrival[j] + wait[j];
    departure[j] = begin[j] + inst.vertex(node[j]).service_duration;
    forward_from(inst, j + 1);
  }
}

Violations ScheduleWork::violations(const Instance& inst, int* max_load) const {
  const std::size_t last = node.size() - 1;
  Violations v;
  int load = 0;
  int peak = 0;
  for (std::size_t p = 1; p < last; ++p) {
    const Vertex& vx = inst.vertex(node[p]);
    load += vx.load_change;
    peak = std::max(peak, load);
    v.time_window += excess(begin[p], vx.window_close);
    const int origin = pickup_position[p];
    if (origin >= 0)
      v.ride_time += excess(begin[p] - departure[static_cast<std::size_t>(origin)], inst.ride_time_bound());
  }
  v.load = excess(peak, inst.capacity());
  v.duration = excess(begin[last] - departure[0], inst.route_duration_bound());
  if (max_load) *max_load = peak;
  return v;
}

}  // namespace detail

Schedule evaluate_route(const Instance& inst, std::span<const int> visits) {
  check_route_structure(inst, visits);

  detail::ScheduleWork work;
  work.load(inst, visits);
  work.forward_from(inst, 1);
  work.optimise(inst);

  Schedule s;
  const std::size_t last = work.node.size() - 1;
  s.violations = work.violations(inst, &s.max_load);
  s.depot_departure = work.departure[0];
  s.depot_return = work.begin[last];
  s.duration = s.depot_return - s.depot_departure;
  s.travel_cost = route_travel_cost(inst, visits);
  s.stops.reserve(visits.size());
  int load = 0;
  for (std::size_t p = 1; p < last; ++p) {
    load += inst.vertex(work.node[p]).load_change;
    s.stops.push_back(Stop{work.node[p], work.arrival[p], work.begin[p], work.wait[p], work.departure[p], load});
    const int origin = work.pickup_position[p];
    if (origin >= 0) {
      s.rides.push_back(RideTime{inst.request_of(work.node[p]),
                                 work.begin[p] - work.departure[static_cast<std::size_t>(origin)]});
    }
  }
  return s;
}

RouteChecker::Result RouteChecker::check(std::span<const int> visits) {
  const Instance& inst = *inst_;
  work_.load(inst, visits);
  work_.forward_from(inst, 1);

  // Earliest-time pass: begin times only grow from here, so a late vertex or
  // an overloaded vehicle at this point can never be repaired.
  const std::size_t last = work_.node.size() - 1;
  int load = 0;
  for (std::size_t p = 1; p < last; ++p) {
    const Vertex& v = inst.vertex(work_.node[p]);
    load += v.load_change;
    if (load > inst.capacity() || work_.begin[p] > v.window_close + kEpsilon)
      return Result{Verdict::kInfeasible, static_cast<int>(p - 1)};
  }

  work_.optimise(inst);
  const Violations v = work_.violations(inst);
  return Result{is_feasible(v) ? Verdict::kFeasible : Verdict::kInfeasible, -1};
}

}  // namespace darp
