#include <iostream>
#include <stdexcept>
#include <utility>

#include "cata/auction.hpp"
#include "cata/oracle.hpp"
#include "cata/scenarios.hpp"
#include "commands.hpp"
#include "json_io.hpp"

namespace cata::cli {

namespace {

AuctionResult run_algorithm(const std::string& name, const World& world,
                            const AuctionConfig& config) {
  if (name == "cata") return run_cata(world, config);
  if (name == "cbaa") return run_cbaa(world, config);
  if (name == "greedy") return run_greedy_centralized(world, config);
  throw std::invalid_argument("assign: unknown algorithm \"" + name + "\"");
}

}  // namespace

int run_assign_command(const AssignOptions& options) {
  const bool from_world = !options.world_path.empty();
  const bool from_setup = !options.setup_path.empty();
  if (from_world == from_setup) {
    throw std::invalid_argument(
        "assign: needs exactly one of --world or --setup");
  }

  World world;
  json world_source;
  if (from_world) {
    world = world_from_json(load_json(options.world_path));
    world_source = {{"type", "file"}, {"path", options.world_path}};
  } else {
    const WorldSpec spec = setup_from_json(load_json(options.setup_path));
    world = generate_world(spec, options.seed);
    world_source = {{"type", "setup"},
                    {"path", options.setup_path},
                    {"name", spec.name},
                    {"seed", options.seed}};
  }

  AuctionConfig config;
  config.initial_safety_distance = options.initial_safety_distance;
  config.min_safety_distance = options.min_safety_distance;
  config.horizon_decay = options.horizon_decay;
  config.max_rounds = options.max_rounds;
  config.speed = options.speed;

  const ResolvedAuctionConfig resolved = resolve(config, world);
  const AuctionResult result = run_algorithm(options.algorithm, world, config);

  // Joint value re-checks every committed pair against the full set at the
  // distance in force when the auction ended.
  const double final_safety = result.horizon_trace.empty()
                                  ? resolved.initial_safety_distance
                                  : result.horizon_trace.back();
  const double joint = evaluate_objective(world, result.assignments,
                                          final_safety, resolved.speed);

  json pairs = json::array();
  for (const BidTuple& winner : result.winners) {
    pairs.push_back({{"robot", winner.robot_id},
                     {"task", winner.task_id},
                     {"bid", winner.bid_value}});
  }

  const json artifact = {
      {"schema", 1},
      {"manifest", make_manifest("assign",
                                 {{"algorithm", options.algorithm},
                                  {"world_source", std::move(world_source)},
                                  {"auction", resolved_auction_to_json(resolved)}})},
      {"world", world_to_json(world)},
      {"assignment",
       {{"pairs", std::move(pairs)},
        {"termination", to_string(result.termination)},
        {"rounds", result.rounds_used},
        {"objective_sequential", result.objective_value},
        {"objective_joint", joint},
        {"final_safety_distance", final_safety},
        {"horizon_trace", result.horizon_trace}}}};

  const std::string text = artifact.dump(2) + "\n";
  if (options.output_path.empty()) {
    std::cout << text;
  } else {
    save_text(options.output_path, text);
  }
  return kExitOk;
}

}  // namespace cata::cli
