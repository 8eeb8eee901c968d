// darp: command-line front end for the MATA dial-a-ride solver.
//
//   darp solve    INSTANCE [--seed S] [--time-limit-ms N | --iterations N] ...
//   darp bench    INSTANCE [--seeds 1,2,3] [--checkpoints 1,2,5] ...
//   darp validate INSTANCE --solution FILE
//   darp gap      COST --bks BKS
//   darp oracle   INSTANCE [--solution FILE]

#include <iostream>

#include "CLI11.hpp"
#include "darp/commands.hpp"

namespace {

void add_engine_flags(CLI::App& cmd, darp::cli::EngineOptions& o) {
  auto* iters = cmd.add_option("--iterations", o.iterations, "Stop after this many iterations");
  auto* time = cmd.add_option("--time-limit-ms", o.time_limit_ms, "Wall-clock budget in ms (default 60000)");
  iters->excludes(time);
  cmd.add_option("--t-max", o.t_max, "Maximum temperature (default n/2)");
  cmd.add_option("--t-min", o.t_min, "Minimum temperature (default m/2)");
  cmd.add_option("--lambda-t", o.lambda_t, "Temperature decay rate (default 0.01)");
  cmd.add_option("--delta-max", o.delta_max, "Iterations without improvement before a restart (default 30)");
  cmd.add_option("--bks", o.bks, "Best known cost, for the gap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-atomic annealing for the static dial-a-ride problem"};
  app.require_subcommand(1);

  std::string instance;
  std::string solution;

  darp::cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", instance, "Instance file")->required();
  solve_cmd->add_option("--seed", solve.engine.seed, "RNG seed");
  add_engine_flags(*solve_cmd, solve.engine);
  solve_cmd->add_option("--trace", solve.trace_path, "Write the convergence trace (CSV) here");
  solve_cmd->add_option("--solution", solve.solution_path, "Write the solution here");

  darp::cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run one trial per seed and summarise");
  bench_cmd->add_option("instance", instance, "Instance file")->required();
  bench_cmd->add_option("--seeds", bench.seeds, "Comma-separated seeds")->delimiter(',');
  bench_cmd->add_option("--checkpoints", bench.checkpoints_s, "Comma-separated checkpoints in seconds")
      ->delimiter(',');
  add_engine_flags(*bench_cmd, bench.engine);
  bench_cmd->add_option("--trace", bench.trace_prefix, "Trace file prefix; one CSV per seed");
  bench_cmd->add_option("--jobs", bench.jobs, "Trials to run concurrently")->check(CLI::PositiveNumber);

  auto* validate_cmd = app.add_subcommand("validate", "Check a solution file against an instance");
  validate_cmd->add_option("instance", instance, "Instance file")->required();
  validate_cmd->add_option("--solution,solution", solution, "Solution file")->required();

  double cost = 0.0;
  double bks = 0.0;
  auto* gap_cmd = app.add_subcommand("gap", "Percentage gap of a cost to the best known cost");
  gap_cmd->add_option("cost", cost, "Cost")->required();
  gap_cmd->add_option("--bks,bks", bks, "Best known cost")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact solution of a tiny instance (n <= 5, m <= 2)");
  oracle_cmd->add_option("instance", instance, "Instance file")->required();
  oracle_cmd->add_option("--solution", solution, "Write the optimal solution here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : darp::cli::kInputError;
  }

  if (*solve_cmd) return darp::cli::solve_command(instance, solve, std::cout, std::cerr);
  if (*bench_cmd) return darp::cli::bench_command(instance, bench, std::cout, std::cerr);
  if (*validate_cmd) return darp::cli::validate_command(instance, solution, std::cout, std::cerr);
  if (*gap_cmd) return darp::cli::gap_command(cost, bks, std::cout, std::cerr);
  if (*oracle_cmd) return darp::cli::oracle_command(instance, solution, std::cout, std::cerr);
  return darp::cli::kInputError;
}
