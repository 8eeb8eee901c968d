#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darp/mata.hpp"

namespace darp {

/// Percentage by which `cost` exceeds the best known solution.
/// Throws std::invalid_argument if bks <= 0.
double gap(Minutes cost, Minutes bks);

/// Best known costs of the R1a, R3a, R6a and R8a benchmark instances. Accepts
/// either naming (R1a or pr01).
std::optional<Minutes> known_bks(std::string_view instance_name);

/// Best cost of the last record at or before `at_ms`.
std::optional<Minutes> cost_at(const std::vector<TraceRecord>& trace, double at_ms);

/// Median; absent values sort above every present one, and an absent median
/// stays absent.
std::optional<double> median(std::vector<std::optional<double>> values);

struct TrialSummary {
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  std::optional<double> first_feasible_ms;
  std::optional<Minutes> first_feasible_cost;
  std::vector<std::optional<Minutes>> checkpoint_costs;
  std::optional<Minutes> final_cost;
};

struct BenchSummary {
  std::string instance;
  std::vector<std::uint64_t> seeds;
  std::vector<double> checkpoints_s;
  std::vector<TrialSummary> trials;
  std::vector<std::optional<Minutes>> median_costs;
  std::optional<Minutes> median_final;
  std::optional<Minutes> bks;
  std::optional<double> final_gap;
};

/// Condenses one trace per seed. `failures[i]`, when non-empty, marks trial i
/// as failed; failed trials are listed but left out of every median.
BenchSummary summarize(std::string instance, const std::vector<std::uint64_t>& seeds,
                       const std::vector<std::vector<TraceRecord>>& traces, const std::vector<double>& checkpoints_s,
                       std::optional<Minutes> bks, const std::vector<std::string>& failures = {});

std::string format_summary_csv(const BenchSummary& summary);
std::string format_summary_table(const BenchSummary& summary);

}  // namespace darp
