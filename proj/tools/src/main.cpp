#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json_io.hpp"

int main(int argc, char** argv) {
  using namespace cata::cli;

  CLI::App app{
      "Collision-aware task assignment: auctions, rollouts, and batch "
      "experiments"};
  app.require_subcommand(1);

  AssignOptions assign;
  CLI::App* assign_cmd = app.add_subcommand(
      "assign", "Run one auction and write the assignment artifact");
  CLI::Option* world_opt = assign_cmd->add_option(
      "--world", assign.world_path, "World JSON file to load");
  CLI::Option* setup_opt =
      assign_cmd->add_option("--setup", assign.setup_path,
                             "Setup spec JSON file; generates the world");
  world_opt->excludes(setup_opt);
  setup_opt->excludes(world_opt);
  assign_cmd->add_option("--seed", assign.seed,
                         "World generation seed for --setup");
  assign_cmd
      ->add_option("--algorithm", assign.algorithm, "cata, cbaa, or greedy")
      ->check(CLI::IsMember({"cata", "cbaa", "greedy"}));
  assign_cmd->add_option(
      "--safety-distance", assign.initial_safety_distance,
      "Starting collision-check distance (default: widest robot spacing)");
  assign_cmd->add_option(
      "--min-safety-distance", assign.min_safety_distance,
      "Horizon floor (default: twice the largest robot radius)");
  assign_cmd->add_option("--horizon-decay", assign.horizon_decay,
                         "Shrink factor applied on fully stalled rounds");
  assign_cmd->add_option("--max-rounds", assign.max_rounds,
                         "Round cap (default: 50 per task)");
  assign_cmd->add_option("--speed", assign.speed,
                         "Uniform robot speed for time discounting");
  assign_cmd->add_option("-o,--output", assign.output_path,
                         "Write the artifact here instead of stdout");

  SimulateOptions simulate;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Roll out an assignment artifact kinematically");
  simulate_cmd
      ->add_option("--assignment", simulate.assignment_path,
                   "Assignment artifact from the assign subcommand")
      ->required();
  simulate_cmd->add_option("--time-step", simulate.sim.time_step,
                           "Integration step in seconds");
  simulate_cmd->add_option("--max-speed", simulate.sim.max_speed,
                           "Speed cap in metres per second");
  simulate_cmd->add_option("--zone", simulate.sim.safety_zone_radius,
                           "Protective zone radius in metres");
  simulate_cmd->add_option("--cone-distance",
                           simulate.sim.maneuver_cone_distance,
                           "Conflict prediction distance for course changes "
                           "(default: the zone radius)");
  simulate_cmd->add_option("--arrival-threshold",
                           simulate.sim.arrival_threshold,
                           "Distance that counts as reaching the task");
  simulate_cmd->add_option("--max-steps", simulate.sim.max_steps,
                           "Hard step cap before declaring a deadlock");
  simulate_cmd->add_option("--stagnation-window",
                           simulate.sim.stagnation_window,
                           "Steps without progress before giving up");
  simulate_cmd->add_option("--repulsion-gain", simulate.sim.repulsion_gain,
                           "Zone spacing pressure strength");
  simulate_cmd->add_option("--trace", simulate.trace_path,
                           "Write a per-step CSV trace to this file");
  simulate_cmd->add_option("-o,--output", simulate.output_path,
                           "Write the metrics artifact here instead of stdout");

  BatchOptions batch;
  CLI::App* batch_cmd = app.add_subcommand(
      "batch", "Run a trial matrix and write rows.csv plus summaries");
  batch_cmd->add_option("--spec", batch.spec_path, "Batch spec JSON file")
      ->required();
  batch_cmd->add_option("--out", batch.out_dir, "Output directory")
      ->required();
  batch_cmd->add_option("--jobs", batch.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--resume", batch.resume,
                      "Skip trials already present in rows.csv");

  VerifyBoundOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-bound",
      "Score random instances against the exhaustive optimum and check the "
      "guaranteed ratio");
  verify_cmd->add_option("--count", verify.count, "Number of instances")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-min", verify.n_min,
                         "Smallest robot and task count");
  verify_cmd->add_option("--n-max", verify.n_max,
                         "Largest robot and task count (at most 8)");
  verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option(
      "--safety-distance", verify.safety_distance,
      "Fixed collision-check distance (default: random 0.5 to 3 per "
      "instance)");
  verify_cmd->add_option("--position-sigma", verify.position_sigma,
                         "Spread of the robot and task clouds");
  verify_cmd->add_option("--speed", verify.speed, "Uniform robot speed");
  verify_cmd->add_option("-o,--output", verify.output_path,
                         "Write the report here instead of stdout");
  // Deliberately undocumented: cripples the measured value so the violation
  // reporting and exit path can be exercised end to end.
  verify_cmd
      ->add_flag_callback(
          "--corrupt-evaluator",
          [&verify] { verify.auction_value_scale = 0.4; })
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*assign_cmd) return run_assign_command(assign);
    if (*simulate_cmd) return run_simulate_command(simulate);
    if (*batch_cmd) return run_batch_command(batch);
    if (*verify_cmd) return run_verify_bound_command(verify);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
