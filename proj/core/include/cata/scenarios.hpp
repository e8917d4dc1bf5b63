#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cata/auction.hpp"
#include "cata/sim.hpp"
#include "cata/world.hpp"

namespace cata {

struct GridLayout {
  int rows = 0;
  int cols = 0;
  double spacing = 2.5;
};

struct LineLayout {
  int count = 0;
  double spacing = 2.5;
};

struct ExplicitRobots {
  std::vector<Vec2> positions;
};

using RobotLayout = std::variant<GridLayout, LineLayout, ExplicitRobots>;

// Task coordinates drawn independently per axis from a normal distribution;
// draws landing closer than twice the robot radius to an accepted task are
// rejected and resampled.
struct NormalTasks {
  int count = 0;
  double sigma_x = 10.0;
  double sigma_y = 10.0;
  Vec2 center;
};

struct ExplicitTasks {
  std::vector<Vec2> positions;
};

using TaskLayout = std::variant<NormalTasks, ExplicitTasks>;

struct WorldSpec {
  std::string name = "world";
  RobotLayout robots;
  TaskLayout tasks;
  // Grid and line formations are centered here; the default puts them 25 m
  // from the default task distribution center. Calibration, not ground truth.
  Vec2 formation_center{0.0, -25.0};
  double robot_radius = 0.25;
  double task_value = 100.0;
  double task_discount = 0.95;
};

// Deterministic for a given (spec, seed). Throws std::invalid_argument on
// impossible layouts (overlapping robots, spacing below robot diameter).
World generate_world(const WorldSpec& spec, std::uint64_t seed);

// Counter-based seed split: stable per (setup, trial) regardless of how many
// trials or setups a batch runs, so resumed or re-sliced batches see the
// same worlds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t setup_index,
                         int trial);

struct BatchSpec {
  std::string name = "batch";
  std::vector<WorldSpec> setups;
  std::vector<std::string> algorithms;  // "cata", "cbaa", "greedy"
  int trials = 100;
  std::uint64_t master_seed = 0;
  AuctionConfig auction;
  SimConfig sim;
};

struct TrialRow {
  std::string setup;
  std::string algorithm;
  int trial = 0;
  std::uint64_t seed = 0;
  int n_robots = 0;
  int n_tasks = 0;
  AuctionTermination termination = AuctionTermination::complete;
  int rounds_used = 0;
  double objective = 0.0;
  TrialMetrics metrics;
};

struct BatchReport {
  std::vector<TrialRow> rows;  // canonical order: setup, algorithm, trial
};

// Skips rows where the predicate returns true (used to resume interrupted
// batches); jobs > 1 runs trials on a thread pool. Row order and content are
// identical for any jobs value. Trials that hit the simulator's caps are
// recorded as deadlocks; the batch itself never aborts.
using SkipPredicate = std::function<bool(
    const std::string& setup, const std::string& algorithm, int trial)>;
BatchReport run_batch(const BatchSpec& spec, int jobs = 1,
                      const SkipPredicate& skip = nullptr);

struct Quartiles {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  int count = 0;
};

// Linear-interpolation quantile on a sorted copy (the common "type 7" rule).
Quartiles quartiles(std::vector<double> values);

struct GroupStats {
  std::string setup;
  std::string algorithm;
  int trials = 0;
  int deadlocks = 0;
  int successful = 0;
  Quartiles avoidance;
  Quartiles maintain_one;
  Quartiles maintain_multi;
  Quartiles completion_steps;  // successful trials only
};

struct Summary {
  std::vector<GroupStats> groups;  // ordered by (setup, algorithm)
};

Summary summarize(const BatchReport& report);

}  // namespace cata
