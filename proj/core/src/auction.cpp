#include "cata/auction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cata/rewards.hpp"

namespace cata {

ResolvedAuctionConfig resolve(const AuctionConfig& config, const World& world) {
  ResolvedAuctionConfig rc;
  rc.min_safety_distance =
      config.min_safety_distance.value_or(2.0 * world.max_robot_radius());
  if (!(rc.min_safety_distance > 0.0) ||
      !std::isfinite(rc.min_safety_distance)) {
    throw std::invalid_argument("auction: safety floor must be > 0");
  }
  rc.initial_safety_distance = std::max(
      rc.min_safety_distance,
      config.initial_safety_distance.value_or(
          world.max_pairwise_robot_distance()));
  if (!std::isfinite(rc.initial_safety_distance)) {
    throw std::invalid_argument("auction: bad initial safety distance");
  }
  rc.horizon_decay = config.horizon_decay;
  if (!(rc.horizon_decay > 0.0) || !(rc.horizon_decay < 1.0)) {
    throw std::invalid_argument("auction: horizon decay must be in (0, 1)");
  }
  rc.max_rounds =
      config.max_rounds.value_or(50 * static_cast<int>(world.tasks.size()));
  if (rc.max_rounds < 1) {
    throw std::invalid_argument("auction: max_rounds must be >= 1");
  }
  rc.speed = config.speed;
  if (!(rc.speed > 0.0) || !std::isfinite(rc.speed)) {
    throw std::invalid_argument("auction: speed must be > 0");
  }
  return rc;
}

const char* to_string(AuctionTermination t) {
  switch (t) {
    case AuctionTermination::complete: return "complete";
    case AuctionTermination::floor_stalled: return "floor_stalled";
    case AuctionTermination::round_limit: return "round_limit";
  }
  return "unknown";
}

BidTuple local_highest_bid(const World& world, const AssignmentSet& assignments,
                           int robot_id, double safety_distance, double speed,
                           bool collision_aware) {
  const Robot* self = world.find_robot(robot_id);
  if (self == nullptr) {
    throw std::invalid_argument("bid: unknown robot");
  }
  BidTuple best{robot_id, 0.0, -1};
  for (const Task& task : world.tasks) {  // ascending id
    if (assignments.task_assigned(task.id)) continue;
    if (best.task_id < 0) best.task_id = task.id;
    const double base = time_discounted_reward(self->position, task, speed);
    const bool flagged =
        collision_aware && collision_predicted(world, assignments, robot_id,
                                               task, safety_distance);
    const double bid = shaped_bid(base, flagged);
    if (bid > best.bid_value) {  // strict: ties keep the lower task id
      best.bid_value = bid;
      best.task_id = task.id;
    }
  }
  return best;
}

namespace {

// Round loop shared by the decentralized variants. Per round every unassigned
// robot reads the same assignment snapshot, publishes its sealed bid, and the
// store's conflict rule leaves exactly one winner. A positive winner commits;
// an all-zero round shrinks the horizon until the floor, where it terminates
// the run with whatever is assigned.
AuctionResult run_rounds(const World& world, const AuctionConfig& config,
                         bool collision_aware) {
  const ResolvedAuctionConfig rc = resolve(config, world);
  const std::size_t target = std::min(world.robots.size(), world.tasks.size());

  AuctionResult result;
  StigmergyStore store;
  double horizon = rc.initial_safety_distance;

  while (store.read_assignments().size() < target) {
    if (result.rounds_used >= rc.max_rounds) {
      result.termination = AuctionTermination::round_limit;
      break;
    }
    const AssignmentSet snapshot = store.read_assignments();
    store.begin_round();
    for (const Robot& robot : world.robots) {
      if (snapshot.robot_assigned(robot.id)) continue;
      store.put_bid(local_highest_bid(world, snapshot, robot.id, horizon,
                                      rc.speed, collision_aware));
    }
    ++result.rounds_used;
    result.horizon_trace.push_back(horizon);

    const std::optional<BidTuple> winner = store.global_bid();
    if (winner.has_value() && winner->bid_value > 0.0) {
      store.commit_winner(*winner);
      result.winners.push_back(*winner);
      result.objective_value += winner->bid_value;
    } else {
      if (horizon <= rc.min_safety_distance) {
        result.termination = AuctionTermination::floor_stalled;
        break;
      }
      horizon = std::max(rc.min_safety_distance,
                         rc.horizon_decay * horizon);
    }
  }

  result.assignments = store.read_assignments();
  return result;
}

}  // namespace

AuctionResult run_cata(const World& world, const AuctionConfig& config) {
  return run_rounds(world, config, /*collision_aware=*/true);
}

AuctionResult run_cbaa(const World& world, const AuctionConfig& config) {
  return run_rounds(world, config, /*collision_aware=*/false);
}

AuctionResult run_greedy_centralized(const World& world,
                                     const AuctionConfig& config) {
  const ResolvedAuctionConfig rc = resolve(config, world);
  const std::size_t target = std::min(world.robots.size(), world.tasks.size());

  AuctionResult result;
  AssignmentSet assignments;
  double horizon = rc.initial_safety_distance;

  while (assignments.size() < target) {
    if (result.rounds_used >= rc.max_rounds) {
      result.termination = AuctionTermination::round_limit;
      break;
    }
    // Scan every free (robot, task) pair; strict > keeps the first of equal
    // bids, i.e. the lowest robot id and then its lowest task id.
    BidTuple best{-1, 0.0, -1};
    for (const Robot& robot : world.robots) {
      if (assignments.robot_assigned(robot.id)) continue;
      for (const Task& task : world.tasks) {
        if (assignments.task_assigned(task.id)) continue;
        const double base =
            time_discounted_reward(robot.position, task, rc.speed);
        const bool flagged = collision_predicted(world, assignments, robot.id,
                                                 task, horizon);
        const double bid = shaped_bid(base, flagged);
        if (bid > best.bid_value) {
          best = BidTuple{robot.id, bid, task.id};
        }
      }
    }
    ++result.rounds_used;
    result.horizon_trace.push_back(horizon);

    if (best.bid_value > 0.0) {
      assignments.insert(best.robot_id, best.task_id);
      result.winners.push_back(best);
      result.objective_value += best.bid_value;
    } else {
      if (horizon <= rc.min_safety_distance) {
        result.termination = AuctionTermination::floor_stalled;
        break;
      }
      horizon = std::max(rc.min_safety_distance,
                         rc.horizon_decay * horizon);
    }
  }

  result.assignments = assignments;
  return result;
}

}  // namespace cata
