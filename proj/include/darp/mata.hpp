#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "darp/instance.hpp"
#include "darp/solution.hpp"

namespace darp {

// Multi-atomic annealing. The temperature sets how many requests the burn
// operator pulls out of the current solution; reform then re-inserts every
// request in random order at its cheapest feasible position. The search never
// leaves the feasible space, and only feasible complete solutions can become
// the incumbent.

using Rng = std::mt19937_64;

struct IterationLimit {
  std::uint64_t iterations = 0;
};
struct TimeLimit {
  double milliseconds = 60000.0;
};
using Termination = std::variant<IterationLimit, TimeLimit>;

struct EngineConfig {
  double t_max = 1.0;
  double t_min = 1.0;
  double lambda_t = 0.01;
  int delta_max = 30;
  Termination termination = TimeLimit{};
  std::uint64_t rng_seed = 1;

  /// t_max = n/2, t_min = m/2, lambda_t = 0.01, delta_max = 30, 60 s.
  static EngineConfig defaults_for(const Instance& inst);
  /// Throws std::invalid_argument unless 0 < t_min <= t_max, 0 < lambda_t < 1
  /// and delta_max >= 0.
  void check() const;
};

/// Request indices in a fixed order.
using RequestList = std::vector<int>;

/// Requests ascending by l_i + e_{i+n}; ties keep index order. Expects the
/// time-window-adjusted instance.
RequestList build_sorted_list(const Instance& inst);

/// Uniform random permutation of 1..n.
RequestList build_random_list(int n, Rng& rng);

/// Cheapest feasible placement of an unserved request, found with two-step
/// insertion: pickup positions are ranked by detour, and dropoff positions are
/// only explored for the best-ranked pickup position that admits a feasible
/// placement. The result is the cheapest over routes (lowest route index on
/// ties). Throws std::logic_error if the request is already served.
std::optional<Placement> best_insertion(const Instance& inst, const Solution& solution, int request);

/// Inserts requests in `order` at their best positions; requests that fit
/// nowhere stay unserved.
Solution construct(const Instance& inst, const RequestList& order);

/// Bounds of the last burn, for tests and tracing.
struct BurnBand {
  int first = 0;  ///< 1-based position in the sorted list
  int last = 0;   ///< inclusive
  int size() const { return last >= first ? last - first + 1 : 0; }
};

/// Removes the requests at sorted-list positions i_start..min(n, i_start+R)
/// where R is uniform in [1, max(1, floor(T))] and i_start uniform in [1, n].
BurnBand burn(const Instance& inst, Solution& solution, double temperature, const RequestList& sorted_list,
              Rng& rng);

/// Removes and re-inserts every request in a fresh random order.
void reform(const Instance& inst, Solution& solution, Rng& rng);

/// T * (1 - lambda_t); redrawn uniformly from [t_min, t_max] if that falls
/// below t_min.
double step_temperature(double temperature, const EngineConfig& config, Rng& rng);

enum class TraceEvent { kConstruct, kImprove, kRestart, kReheat, kTick };

const char* to_string(TraceEvent event);

struct TraceRecord {
  double elapsed_ms = 0.0;
  std::uint64_t iteration = 0;
  double temperature = 0.0;
  std::optional<Minutes> best_cost;
  int best_served = 0;
  Minutes current_cost = 0.0;
  int current_served = 0;
  TraceEvent event = TraceEvent::kTick;
};

using TraceObserver = std::function<void(const TraceRecord&)>;

enum class OperatorStage { kBurn, kReform };
/// Sees the current solution right after each burn and each reform.
using OperatorHook = std::function<void(OperatorStage, const Solution&)>;

struct AnnealResult {
  std::optional<Solution> best;
  /// The current solution when the loop stopped (feasible, maybe incomplete).
  Solution last;
  std::uint64_t iterations = 0;
  double elapsed_ms = 0.0;
};

/// Runs the annealing loop until the configured termination. `inst` must be
/// the time-window-adjusted instance.
AnnealResult anneal(const Instance& inst, const EngineConfig& config, const TraceObserver& observer = {},
                    const OperatorHook& hook = {});

}  // namespace darp
