#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cata/stigmergy.hpp"
#include "cata/world.hpp"

namespace cata {

struct AuctionConfig {
  // Starting collision-check distance. Unset: the maximum pairwise robot
  // spacing at start (never below the floor).
  std::optional<double> initial_safety_distance;
  // Floor the horizon shrinks toward. Unset: twice the largest robot radius.
  std::optional<double> min_safety_distance;
  // Multiplicative shrink applied when a whole round produces only zero bids.
  double horizon_decay = 0.8;
  // Unset: 50 rounds per task.
  std::optional<int> max_rounds;
  // Uniform travel speed used for time discounting.
  double speed = 1.0;
  // Applied to tasks that do not carry their own value/discount when worlds
  // are built from files or generators; bidding itself reads the task fields.
  double default_task_value = 100.0;
  double default_task_discount = 0.95;
};

struct ResolvedAuctionConfig {
  double initial_safety_distance = 0.0;
  double min_safety_distance = 0.0;
  double horizon_decay = 0.8;
  int max_rounds = 0;
  double speed = 1.0;
};

// Fills defaults from the world and validates (floor > 0, decay in (0,1),
// max_rounds >= 1, speed > 0). Throws std::invalid_argument.
ResolvedAuctionConfig resolve(const AuctionConfig& config, const World& world);

enum class AuctionTermination {
  complete,      // min(robots, tasks) assignments committed
  floor_stalled, // zero bids all around with the horizon already at its floor
  round_limit,   // gave up; result carries the partial assignment
};

const char* to_string(AuctionTermination t);

struct AuctionResult {
  AssignmentSet assignments;
  std::vector<BidTuple> winners;      // in commit order
  std::vector<double> horizon_trace;  // safety distance in force each round
  int rounds_used = 0;
  double objective_value = 0.0;       // sum of winning bids
  AuctionTermination termination = AuctionTermination::complete;
};

// One robot's sealed bid: its best shaped bid over the unassigned tasks,
// lowest task id on ties. All bids zero yields a zero tuple naming the lowest
// unassigned task, which keeps the robot participating so a fully stalled
// round is observable. collision_aware=false skips the cone shaping.
BidTuple local_highest_bid(const World& world, const AssignmentSet& assignments,
                           int robot_id, double safety_distance, double speed,
                           bool collision_aware);

// Collision-aware auction: one winner per round through the shared store,
// horizon shrinking on fully-stalled rounds.
AuctionResult run_cata(const World& world, const AuctionConfig& config);

// Control arm: identical machinery with collision shaping disabled.
AuctionResult run_cbaa(const World& world, const AuctionConfig& config);

// Sequential centralized greedy over all (robot, task) pairs with the same
// shaping, tie-breaks, and horizon controller. Must pick the exact same
// assignments as run_cata; kept as an independent implementation.
AuctionResult run_greedy_centralized(const World& world,
                                     const AuctionConfig& config);

}  // namespace cata
