#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "darp/mata.hpp"

namespace darp::cli {

// Exit statuses shared by the commands.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNoSolution = 2;
inline constexpr int kInvalidSolution = 3;

/// Engine settings as given on the command line; unset values fall back to
/// EngineConfig::defaults_for.
struct EngineOptions {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> iterations;
  std::optional<double> time_limit_ms;
  std::optional<double> t_max;
  std::optional<double> t_min;
  std::optional<double> lambda_t;
  std::optional<int> delta_max;
  std::optional<double> bks;

  /// Throws std::invalid_argument on out-of-range values.
  EngineConfig resolve(const Instance& inst) const;
};

struct SolveOptions {
  EngineOptions engine;
  std::string trace_path;
  std::string solution_path;
};

struct BenchOptions {
  EngineOptions engine;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<double> checkpoints_s{1, 2, 5, 15, 30, 60};
  /// Per-seed traces go to <trace_prefix>.seed<k>.csv when set.
  std::string trace_prefix;
  int jobs = 1;
};

/// Instance name used for BKS lookup: file name without directory or extension.
std::string instance_name(const std::string& path);

int solve_command(const std::string& instance_path, const SolveOptions& options, std::ostream& out,
                  std::ostream& err);
int bench_command(const std::string& instance_path, const BenchOptions& options, std::ostream& out,
                  std::ostream& err);
int validate_command(const std::string& instance_path, const std::string& solution_path, std::ostream& out,
                     std::ostream& err);
int gap_command(double cost, double bks, std::ostream& out, std::ostream& err);
int oracle_command(const std::string& instance_path, const std::string& solution_path, std::ostream& out,
                   std::ostream& err);

}  // namespace darp::cli
