#include "darp/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace darp {

namespace {

double over(double value, double limit) { return value - limit > kEpsilon ? value - limit : 0.0; }

bool same_sign(double a, double b) { return (a > 0.0) == (b > 0.0); }

// Consistency slack when replaying a schedule; covers summation-order drift.
constexpr double kReplayTolerance = 1e-7;

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> values;
  if (hi < lo) return values;
  const auto count = static_cast<long>(std::floor((hi - lo) / step));
  values.reserve(static_cast<std::size_t>(count) + 2);
  for (long s = 0; s <= count; ++s) values.push_back(lo + static_cast<double>(s) * step);
  if (values.empty() || hi - values.back() > 1e-12) values.push_back(hi);
  return values;
}

void compare_violations(const Violations& fast, const Violations& slow, int k, std::vector<std::string>& out) {
  const char* names[] = {"load", "duration", "time window", "ride time"};
  const double f[] = {fast.load, fast.duration, fast.time_window, fast.ride_time};
  const double s[] = {slow.load, slow.duration, slow.time_window, slow.ride_time};
  for (int c = 0; c < 4; ++c) {
    if (!same_sign(f[c], s[c])) {
      std::ostringstream msg;
      msg << "route " << k << ": " << names[c] << " violation is " << f[c] << " in the evaluator but " << s[c]
          << " on recomputation";
      out.push_back(msg.str());
    }
  }
}

}  // namespace

bool ValidationReport::clean() const {
  return structural_errors.empty() && disagreements.empty() && is_feasible(violations) && complete;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << "cost " << cost << "\nserved " << served << (complete ? " (complete)" : " (incomplete)") << '\n';
  out << "violations load=" << violations.load << " duration=" << violations.duration
      << " time_window=" << violations.time_window << " ride_time=" << violations.ride_time << '\n';
  for (const auto& e : structural_errors) out << "structure: " << e << '\n';
  for (const auto& d : disagreements) out << "mismatch: " << d << '\n';
  out << (clean() ? "OK" : "INVALID") << '\n';
  return out.str();
}

Violations simulate_route(const Instance& inst, std::span<const int> visits, Minutes depot_departure,
                          std::span<const Minutes> extra_wait, std::vector<Minutes>& begin_times) {
  begin_times.assign(visits.size(), 0.0);
  std::map<int, double> left_pickup;
  Violations v;
  int load = 0;
  int peak = 0;
  double clock = depot_departure;
  int at = 0;
  for (std::size_t p = 0; p < visits.size(); ++p) {
    const Vertex& vx = inst.vertex(visits[p]);
    clock += inst.travel(at, visits[p]);
    clock = std::max(clock, vx.window_open);
    if (!extra_wait.empty()) clock += extra_wait[p];
    begin_times[p] = clock;
    v.time_window += over(clock, vx.window_close);
    if (inst.is_dropoff(visits[p])) {
      auto it = left_pickup.find(visits[p] - inst.requests());
      if (it != left_pickup.end()) v.ride_time += over(clock - it->second, inst.ride_time_bound());
    }
    load += vx.load_change;
    peak = std::max(peak, load);
    clock += vx.service_duration;
    if (inst.is_pickup(visits[p])) left_pickup[visits[p]] = clock;
    at = visits[p];
  }
  clock += inst.travel(at, 0);
  v.load = over(peak, inst.capacity());
  v.duration = over(clock - depot_departure, inst.route_duration_bound());
  return v;
}

std::optional<Violations> schedule_violations(const Instance& inst, std::span<const int> visits,
                                              Minutes depot_departure, std::span<const Minutes> begin_times) {
  if (begin_times.size() != visits.size()) return std::nullopt;
  if (depot_departure < inst.depot().window_open - kReplayTolerance) return std::nullopt;
  std::map<int, double> left_pickup;
  Violations v;
  int load = 0;
  int peak = 0;
  double ready = depot_departure;
  int at = 0;
  for (std::size_t p = 0; p < visits.size(); ++p) {
    const Vertex& vx = inst.vertex(visits[p]);
    const double b = begin_times[p];
    ready += inst.travel(at, visits[p]);
    if (b < vx.window_open - kReplayTolerance || b < ready - kReplayTolerance) return std::nullopt;
    v.time_window += over(b, vx.window_close);
    if (inst.is_dropoff(visits[p])) {
      auto it = left_pickup.find(visits[p] - inst.requests());
      if (it != left_pickup.end()) v.ride_time += over(b - it->second, inst.ride_time_bound());
    }
    load += vx.load_change;
    peak = std::max(peak, load);
    ready = b + vx.service_duration;
    if (inst.is_pickup(visits[p])) left_pickup[visits[p]] = ready;
    at = visits[p];
  }
  const double back = ready + inst.travel(at, 0);
  v.load = over(peak, inst.capacity());
  v.duration = over(back - depot_departure, inst.route_duration_bound());
  return v;
}

std::optional<Minutes> depot_departure_search(const Instance& inst, std::span<const int> visits, Minutes step) {
  const double earliest = inst.depot().window_open;
  std::vector<Minutes> begins;
  if (visits.empty()) return earliest;
  const Vertex& first = inst.vertex(visits.front());
  const double leg = inst.travel(0, visits.front());
  // Leaving before first.window_open - leg only adds waiting at the first stop.
  const double lo = std::max(earliest, first.window_open - leg);
  const double hi = std::max(lo, first.window_close - leg);
  for (double d0 : grid(lo, hi, step)) {
    if (is_feasible(simulate_route(inst, visits, d0, {}, begins))) return d0;
  }
  return std::nullopt;
}

bool grid_schedule_search(const Instance& inst, std::span<const int> visits, Minutes step) {
  if (visits.empty()) return true;
  const std::size_t k = visits.size();
  const int n = inst.requests();
  std::vector<std::size_t> partner(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      if (visits[q] == visits[p] + n || visits[q] == visits[p] - n) partner[p] = q;
    }
  }

  std::vector<double> begin(k), leave(k);
  int load = 0;
  double depot = 0.0;

  // Begin time at position p if nothing from p on waits deliberately.
  auto natural_begin = [&](std::size_t p, double ready) {
    return std::max(inst.vertex(visits[p]).window_open, ready + inst.travel(p == 0 ? 0 : visits[p - 1], visits[p]));
  };

  std::function<bool(std::size_t)> place = [&](std::size_t p) -> bool {
    if (p == k) {
      const double back = leave[k - 1] + inst.travel(visits[k - 1], 0);
      return back - depot <= inst.route_duration_bound() + kEpsilon;
    }
    const Vertex& vx = inst.vertex(visits[p]);
    const double ready = p == 0 ? depot : leave[p - 1];
    const double natural = natural_begin(p, ready);
    if (natural > vx.window_close + kEpsilon) return false;
    if (natural - depot > inst.route_duration_bound() + kEpsilon) return false;

    std::vector<double> options{0.0};
    if (p > 0 && inst.is_pickup(visits[p])) {
      // Waiting here only pays off while it is absorbed by idle time before
      // this passenger's dropoff; beyond that it delays everyone for nothing.
      double idle = 0.0;
      double t = natural + vx.service_duration;
      for (std::size_t q = p + 1; q <= partner[p] && q < k; ++q) {
        const double arrive = t + inst.travel(visits[q - 1], visits[q]);
        const double b = std::max(inst.vertex(visits[q]).window_open, arrive);
        idle += b - arrive;
        t = b + inst.vertex(visits[q]).service_duration;
      }
      options = grid(0.0, std::min(idle, vx.window_close - natural), step);
    }

    const int load_before = load;
    load += vx.load_change;
    if (load > inst.capacity()) {
      load = load_before;
      return false;
    }
    for (double extra : options) {
      begin[p] = natural + extra;
      leave[p] = begin[p] + vx.service_duration;
      if (inst.is_dropoff(visits[p]) && begin[p] - leave[partner[p]] > inst.ride_time_bound() + kEpsilon) continue;
      if (place(p + 1)) {
        load = load_before;
        return true;
      }
    }
    load = load_before;
    return false;
  };

  const Vertex& first = inst.vertex(visits.front());
  const double leg = inst.travel(0, visits.front());
  const double lo = std::max(inst.depot().window_open, first.window_open - leg);
  const double hi = first.window_close - leg;
  for (double d0 : grid(lo, hi, step)) {
    depot = d0;
    if (place(0)) return true;
  }
  return false;
}

ValidationReport validate(const Instance& inst, const Solution& solution) {
  const std::vector<int> unserved = solution.unserved();
  return validate(inst, solution.routes(), solution.cost(), unserved);
}

ValidationReport validate(const Instance& inst, std::span<const Route> routes, Minutes claimed_cost,
                          std::span<const int> claimed_unserved) {
  ValidationReport report;
  const int n = inst.requests();
  auto& errors = report.structural_errors;

  if (static_cast<int>(routes.size()) > inst.vehicles())
    errors.push_back(std::to_string(routes.size()) + " routes for " + std::to_string(inst.vehicles()) + " vehicles");
  std::vector<int> vehicle_used(static_cast<std::size_t>(inst.vehicles()), 0);
  for (const Route& r : routes) {
    if (r.vehicle < 0 || r.vehicle >= inst.vehicles())
      errors.push_back("route names unknown vehicle " + std::to_string(r.vehicle));
    else if (vehicle_used[static_cast<std::size_t>(r.vehicle)]++)
      errors.push_back("vehicle " + std::to_string(r.vehicle) + " has more than one route");
  }

  // Where each vertex was seen: route index and position.
  struct Seen {
    int route = -1;
    std::size_t position = 0;
  };
  std::vector<Seen> seen(static_cast<std::size_t>(2 * n + 1));
  std::vector<bool> route_ok(routes.size(), true);
  for (std::size_t k = 0; k < routes.size(); ++k) {
    const auto& visits = routes[k].visits;
    for (std::size_t p = 0; p < visits.size(); ++p) {
      const int v = visits[p];
      if (v < 1 || v > 2 * n) {
        errors.push_back("route " + std::to_string(k) + " visits invalid vertex " + std::to_string(v));
        route_ok[k] = false;
        continue;
      }
      Seen& s = seen[static_cast<std::size_t>(v)];
      if (s.route >= 0) {
        errors.push_back("vertex " + std::to_string(v) + " is visited more than once");
        route_ok[k] = false;
        route_ok[static_cast<std::size_t>(s.route)] = false;
        continue;
      }
      s = Seen{static_cast<int>(k), p};
    }
  }

  std::vector<bool> served(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const Seen& pick = seen[static_cast<std::size_t>(i)];
    const Seen& drop = seen[static_cast<std::size_t>(i + n)];
    if (pick.route < 0 && drop.route < 0) continue;
    const std::string req = "request " + std::to_string(i);
    if (pick.route < 0 || drop.route < 0) {
      errors.push_back(req + " has only its " + (pick.route < 0 ? "dropoff" : "pickup") + " in a route");
      route_ok[static_cast<std::size_t>(std::max(pick.route, drop.route))] = false;
      continue;
    }
    if (pick.route != drop.route) {
      errors.push_back(req + " is split between routes " + std::to_string(pick.route) + " and " +
                       std::to_string(drop.route));
      route_ok[static_cast<std::size_t>(pick.route)] = false;
      route_ok[static_cast<std::size_t>(drop.route)] = false;
      continue;
    }
    if (drop.position < pick.position) {
      errors.push_back(req + ": dropoff precedes pickup in route " + std::to_string(pick.route));
      route_ok[static_cast<std::size_t>(pick.route)] = false;
      continue;
    }
    served[static_cast<std::size_t>(i)] = true;
  }

  std::vector<bool> listed(static_cast<std::size_t>(n) + 1, false);
  for (int i : claimed_unserved) {
    if (i < 1 || i > n) {
      errors.push_back("unserved list names unknown request " + std::to_string(i));
      continue;
    }
    listed[static_cast<std::size_t>(i)] = true;
  }
  for (int i = 1; i <= n; ++i) {
    const bool in_route = seen[static_cast<std::size_t>(i)].route >= 0 || seen[static_cast<std::size_t>(i + n)].route >= 0;
    if (in_route && listed[static_cast<std::size_t>(i)])
      errors.push_back("request " + std::to_string(i) + " is routed but listed as unserved");
    if (!in_route && !listed[static_cast<std::size_t>(i)])
      errors.push_back("request " + std::to_string(i) + " is neither routed nor listed as unserved");
    if (served[static_cast<std::size_t>(i)]) ++report.served;
  }
  report.complete = report.served == n;

  // Cost: leg by leg.
  for (const Route& r : routes) {
    int at = 0;
    for (int v : r.visits) {
      if (v >= 0 && v < inst.vertex_count()) {
        report.cost += inst.travel(at, v);
        at = v;
      }
    }
    report.cost += inst.travel(at, 0);
  }
  if (std::abs(report.cost - claimed_cost) > 1e-6) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "claimed cost " << claimed_cost << " but legs sum to " << report.cost;
    report.disagreements.push_back(msg.str());
  }

  // Schedules: replay the evaluator's schedule independently, and look for a
  // schedule it may have missed.
  for (std::size_t k = 0; k < routes.size(); ++k) {
    if (!route_ok[k]) continue;
    const auto& visits = routes[k].visits;
    Schedule fast;
    try {
      fast = evaluate_route(inst, visits);
    } catch (const StructureError& e) {
      report.disagreements.push_back("route " + std::to_string(k) + ": evaluator rejects the route: " + e.what());
      continue;
    }
    std::vector<Minutes> begins;
    for (const Stop& s : fast.stops) begins.push_back(s.begin);
    const auto replay = schedule_violations(inst, visits, fast.depot_departure, begins);
    if (!replay) {
      report.disagreements.push_back("route " + std::to_string(k) + ": evaluator schedule is inconsistent");
      report.violations += simulate_route(inst, visits, inst.depot().window_open, {}, begins);
      continue;
    }
    compare_violations(fast.violations, *replay, static_cast<int>(k), report.disagreements);
    if (std::abs(fast.travel_cost - route_travel_cost(inst, visits)) > 1e-9)
      report.disagreements.push_back("route " + std::to_string(k) + ": evaluator travel cost differs");
    report.violations += *replay;
    if (!is_feasible(*replay)) {
      if (const auto d0 = depot_departure_search(inst, visits)) {
        std::ostringstream msg;
        msg << "route " << k << ": evaluator reports violations but departing the depot at " << *d0
            << " gives none";
        report.disagreements.push_back(msg.str());
      }
    }
  }
  return report;
}

}  // namespace darp
