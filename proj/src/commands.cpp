#include "darp/commands.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "darp/bench.hpp"
#include "darp/instance.hpp"
#include "darp/oracle.hpp"
#include "darp/solution_io.hpp"
#include "darp/trace.hpp"
#include "darp/validate.hpp"

namespace darp::cli {

namespace {

std::string fixed(double value, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

// Loads and adjusts an instance, printing the diagnostic on failure.
std::optional<Instance> prepare(const std::string& path, std::ostream& err) {
  try {
    return tighten_time_windows(load_instance(path));
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  } catch (const InfeasibleRequestError& e) {
    err << "error: " << path << ": " << e.what() << " (no feasible schedule exists for it)\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

EngineConfig EngineOptions::resolve(const Instance& inst) const {
  EngineConfig c = EngineConfig::defaults_for(inst);
  c.rng_seed = seed;
  if (t_max) c.t_max = *t_max;
  if (t_min) c.t_min = *t_min;
  if (lambda_t) c.lambda_t = *lambda_t;
  if (delta_max) c.delta_max = *delta_max;
  if (iterations && time_limit_ms) throw std::invalid_argument("give either an iteration count or a time limit");
  if (iterations)
    c.termination = IterationLimit{*iterations};
  else
    c.termination = TimeLimit{time_limit_ms.value_or(60000.0)};
  c.check();
  return c;
}

std::string instance_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

int solve_command(const std::string& instance_path, const SolveOptions& options, std::ostream& out,
                  std::ostream& err) {
  const auto inst = prepare(instance_path, err);
  if (!inst) return kInputError;
  EngineConfig config;
  try {
    config = options.engine.resolve(*inst);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto bks = options.engine.bks ? options.engine.bks : known_bks(instance_name(instance_path));
  if (bks && !(*bks > 0.0)) {
    err << "error: --bks must be positive\n";
    return kInputError;
  }

  TraceRecorder recorder = options.trace_path.empty() ? TraceRecorder() : TraceRecorder(options.trace_path);
  if (!recorder.ok()) {
    err << "error: cannot write trace '" << options.trace_path << "'\n";
    return kInputError;
  }
  const AnnealResult result = anneal(*inst, config, [&](const TraceRecord& r) { recorder(r); });

  const Solution& final = result.best ? *result.best : result.last;
  if (!options.solution_path.empty() && !write_file(options.solution_path, format_solution(*inst, final), err))
    return kInputError;

  out << "instance " << instance_name(instance_path) << " (n=" << inst->requests() << ", m=" << inst->vehicles()
      << ")\n";
  out << "iterations " << result.iterations << " in " << fixed(result.elapsed_ms, 0) << " ms\n";
  out << "served " << final.served() << '/' << inst->requests() << '\n';
  out << "cost " << fixed(final.cost()) << '\n';
  if (bks && result.best) out << "gap " << fixed(gap(final.cost(), *bks)) << "% (BKS " << fixed(*bks) << ")\n";
  if (!result.best) {
    out << "no feasible complete solution found\n";
    return kNoSolution;
  }
  return kOk;
}

int bench_command(const std::string& instance_path, const BenchOptions& options, std::ostream& out,
                  std::ostream& err) {
  const auto inst = prepare(instance_path, err);
  if (!inst) return kInputError;
  if (options.seeds.empty()) {
    err << "error: at least one seed is required\n";
    return kInputError;
  }
  std::vector<EngineConfig> configs;
  try {
    for (std::uint64_t seed : options.seeds) {
      EngineOptions o = options.engine;
      o.seed = seed;
      configs.push_back(o.resolve(*inst));
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto bks = options.engine.bks ? options.engine.bks : known_bks(instance_name(instance_path));

  const std::size_t trials = options.seeds.size();
  std::vector<std::vector<TraceRecord>> traces(trials);
  std::vector<std::string> failures(trials);
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;

  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      const std::string path =
          options.trace_prefix.empty() ? "" : options.trace_prefix + ".seed" + std::to_string(options.seeds[t]) + ".csv";
      try {
        TraceRecorder recorder = path.empty() ? TraceRecorder() : TraceRecorder(path);
        if (!recorder.ok()) throw std::runtime_error("cannot write trace '" + path + "'");
        anneal(*inst, configs[t], [&](const TraceRecord& r) { recorder(r); });
        traces[t] = recorder.records();
      } catch (const std::exception& e) {
        failures[t] = e.what();
        std::lock_guard lock(log_mutex);
        err << "seed " << options.seeds[t] << " failed: " << e.what() << '\n';
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(trials)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const BenchSummary summary =
      summarize(instance_name(instance_path), options.seeds, traces, options.checkpoints_s, bks, failures);
  out << format_summary_csv(summary) << '\n' << format_summary_table(summary);
  return kOk;
}

int validate_command(const std::string& instance_path, const std::string& solution_path, std::ostream& out,
                     std::ostream& err) {
  const auto inst = prepare(instance_path, err);
  if (!inst) return kInputError;
  SolutionFile file;
  try {
    file = load_solution(solution_path);
  } catch (const ParseError& e) {
    err << "error: " << solution_path << ": " << e.what() << '\n';
    return kInputError;
  }
  const ValidationReport report = validate(*inst, file.routes, file.cost, file.unserved);
  out << report.to_string();
  return report.clean() ? kOk : kInvalidSolution;
}

int gap_command(double cost, double bks, std::ostream& out, std::ostream& err) {
  try {
    out << "gap " << fixed(gap(cost, bks), 4) << "%\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

int oracle_command(const std::string& instance_path, const std::string& solution_path, std::ostream& out,
                   std::ostream& err) {
  const auto inst = prepare(instance_path, err);
  if (!inst) return kInputError;
  OracleResult result;
  try {
    result = exact_solve(*inst);
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << "explored " << result.explored << " visit orders\n";
  if (!result.optimal_cost) {
    out << "infeasible\n";
    return kNoSolution;
  }
  const std::string text = format_solution(*inst, result.optimal_solution);
  out << text;
  if (!solution_path.empty() && !write_file(solution_path, text, err)) return kInputError;
  return kOk;
}

}  // namespace darp::cli
