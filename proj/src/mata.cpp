#include "darp/mata.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "darp/schedule.hpp"

namespace darp {

EngineConfig EngineConfig::defaults_for(const Instance& inst) {
  EngineConfig c;
  c.t_max = inst.requests() / 2.0;
  c.t_min = std::min(inst.vehicles() / 2.0, c.t_max);
  // Zero requests leave nothing to burn; any valid temperature will do.
  if (c.t_max <= 0.0) c.t_max = c.t_min = 1.0;
  return c;
}

void EngineConfig::check() const {
  if (!(t_min > 0.0)) throw std::invalid_argument("t_min must be positive");
  if (!(t_min <= t_max)) throw std::invalid_argument("t_min must not exceed t_max");
  if (!(lambda_t > 0.0 && lambda_t < 1.0)) throw std::invalid_argument("lambda_t must lie in (0, 1)");
  if (delta_max < 0) throw std::invalid_argument("delta_max must be non-negative");
  if (const auto* t = std::get_if<TimeLimit>(&termination); t && !(t->milliseconds >= 0.0))
    throw std::invalid_argument("time limit must be non-negative");
}

RequestList build_sorted_list(const Instance& inst) {
  RequestList list(static_cast<std::size_t>(inst.requests()));
  std::iota(list.begin(), list.end(), 1);
  std::stable_sort(list.begin(), list.end(),
                   [&](int a, int b) { return inst.sort_key(a) < inst.sort_key(b); });
  return list;
}

RequestList build_random_list(int n, Rng& rng) {
  RequestList list(static_cast<std::size_t>(n));
  std::iota(list.begin(), list.end(), 1);
  std::shuffle(list.begin(), list.end(), rng);
  return list;
}

std::optional<Placement> best_insertion(const Instance& inst, const Solution& solution, int request) {
  if (solution.serves(request))
    throw std::logic_error("request " + std::to_string(request) + " is already served");

  const int pickup = inst.pickup(request);
  const int dropoff = inst.dropoff(request);
  RouteChecker checker(inst);
  std::vector<int> candidate;
  std::vector<std::pair<double, int>> ranked;
  std::optional<Placement> best;

  for (int k = 0; k < static_cast<int>(solution.routes().size()); ++k) {
    const std::vector<int>& visits = solution.route(k).visits;
    const int size = static_cast<int>(visits.size());
    auto at = [&](int index) { return index < 0 || index >= size ? 0 : visits[static_cast<std::size_t>(index)]; };

    // Step 1: pickup positions by detour.
    ranked.clear();
    for (int pos = 1; pos <= size + 1; ++pos) {
      const int prev = at(pos - 2);
      const int next = at(pos - 1);
      ranked.emplace_back(inst.travel(prev, pickup) + inst.travel(pickup, next) - inst.travel(prev, next), pos);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // Step 2: full evaluation of the dropoff positions behind each pickup
    // position until one pickup position works.
    for (const auto& [pickup_detour, pp] : ranked) {
      std::optional<Placement> route_best;
      for (int dp = pp + 1; dp <= size + 2; ++dp) {
        candidate.assign(visits.begin(), visits.end());
        candidate.insert(candidate.begin() + (pp - 1), pickup);
        candidate.insert(candidate.begin() + (dp - 1), dropoff);
        const auto result = checker.check(candidate);
        if (result.verdict == RouteChecker::Verdict::kFeasible) {
          const int prev = candidate[static_cast<std::size_t>(dp - 2)];
          const int next = dp < static_cast<int>(candidate.size()) ? candidate[static_cast<std::size_t>(dp)] : 0;
          const double increase =
              pickup_detour + inst.travel(prev, dropoff) + inst.travel(dropoff, next) - inst.travel(prev, next);
          if (!route_best || increase < route_best->cost_increase) route_best = Placement{k, pp, dp, increase};
        } else if (result.blocking_position >= 0 && result.blocking_position < dp - 1) {
          break;
        }
      }
      if (route_best) {
        if (!best || route_best->cost_increase < best->cost_increase) best = route_best;
        break;
      }
    }
  }
  return best;
}

Solution construct(const Instance& inst, const RequestList& order) {
  Solution solution(inst);
  for (int request : order) {
    if (const auto placement = best_insertion(inst, solution, request)) solution.insert(inst, request, *placement);
  }
  return solution;
}

BurnBand burn(const Instance& inst, Solution& solution, double temperature, const RequestList& sorted_list,
              Rng& rng) {
  const int n = inst.requests();
  if (n == 0) return {};
  const auto ceiling = std::max<long>(1, static_cast<long>(std::floor(temperature)));
  const auto band = std::uniform_int_distribution<long>(1, ceiling)(rng);
  const int first = std::uniform_int_distribution<int>(1, n)(rng);
  const int last = static_cast<int>(std::min<long>(n, first + band));
  for (int pos = first; pos <= last; ++pos) solution.remove(inst, sorted_list[static_cast<std::size_t>(pos - 1)]);
  return BurnBand{first, last};
}

void reform(const Instance& inst, Solution& solution, Rng& rng) {
  for (int request : build_random_list(inst.requests(), rng)) {
    solution.remove(inst, request);
    if (const auto placement = best_insertion(inst, solution, request)) solution.insert(inst, request, *placement);
  }
}

double step_temperature(double temperature, const EngineConfig& config, Rng& rng) {
  const double next = temperature * (1.0 - config.lambda_t);
  if (next < config.t_min) return std::uniform_real_distribution<double>(config.t_min, config.t_max)(rng);
  return next;
}

const char* to_string(TraceEvent event) {
  switch (event) {
    case TraceEvent::kConstruct: return "construct";
    case TraceEvent::kImprove: return "improve";
    case TraceEvent::kRestart: return "restart";
    case TraceEvent::kReheat: return "reheat";
    case TraceEvent::kTick: return "tick";
  }
  return "?";
}

AnnealResult anneal(const Instance& inst, const EngineConfig& config, const TraceObserver& observer,
                    const OperatorHook& hook) {
  config.check();
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  auto elapsed_ms = [&] { return std::chrono::duration<double, std::milli>(Clock::now() - started).count(); };

  const auto* iteration_limit = std::get_if<IterationLimit>(&config.termination);
  const auto* time_limit = std::get_if<TimeLimit>(&config.termination);

  Rng rng(config.rng_seed);
  double temperature = config.t_max;
  int no_improvement = 0;
  std::optional<Solution> best;
  std::uint64_t iteration = 0;

  const RequestList sorted_list = build_sorted_list(inst);
  Solution current = construct(inst, sorted_list);

  double last_record_ms = 0.0;
  std::uint64_t last_record_iteration = 0;
  auto record = [&](TraceEvent event) {
    if (!observer) return;
    TraceRecord r;
    r.elapsed_ms = elapsed_ms();
    r.iteration = iteration;
    r.temperature = temperature;
    if (best) {
      r.best_cost = best->cost();
      r.best_served = best->served();
    }
    r.current_cost = current.cost();
    r.current_served = current.served();
    r.event = event;
    last_record_ms = r.elapsed_ms;
    last_record_iteration = iteration;
    observer(r);
  };
  record(TraceEvent::kConstruct);

  auto finished = [&] {
    if (iteration_limit) return iteration >= iteration_limit->iterations;
    return elapsed_ms() >= time_limit->milliseconds;
  };

  while (!finished()) {
    ++iteration;
    burn(inst, current, temperature, sorted_list, rng);
    if (hook) hook(OperatorStage::kBurn, current);
    reform(inst, current, rng);
    if (hook) hook(OperatorStage::kReform, current);

    if (current.complete() && (!best || current.cost() < best->cost())) {
      best = current;
      record(TraceEvent::kImprove);
    } else {
      ++no_improvement;
    }

    if (no_improvement > config.delta_max) {
      if (best) current = *best;
      no_improvement = 0;
      record(TraceEvent::kRestart);
    }

    const bool reheat = temperature * (1.0 - config.lambda_t) < config.t_min;
    temperature = step_temperature(temperature, config, rng);
    if (reheat) record(TraceEvent::kReheat);

    // Wall-clock ticks would make iteration-bounded traces irreproducible.
    if (iteration - last_record_iteration >= 100 || (time_limit && elapsed_ms() - last_record_ms >= 10.0))
      record(TraceEvent::kTick);
  }

  // Only reachable without iterations: the construction itself is the answer.
  if (!best && current.complete()) best = current;
  return AnnealResult{std::move(best), std::move(current), iteration, elapsed_ms()};
}

}  // namespace darp
