#include "cata/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "cata/geometry.hpp"
#include "cata/rewards.hpp"
#include "cata/scenarios.hpp"

namespace cata {

double evaluate_objective(const World& world, const AssignmentSet& assignments,
                          double safety_distance, double speed) {
  double total = 0.0;
  for (const auto& [robot_id, task_id] : assignments.by_robot()) {
    const Robot* robot = world.find_robot(robot_id);
    const Task* task = world.find_task(task_id);
    if (robot == nullptr || task == nullptr) {
      throw std::invalid_argument("objective: assignment references unknown "
                                  "robot or task");
    }
    const double base = time_discounted_reward(robot->position, *task, speed);
    const bool flagged = collision_predicted(world, assignments, robot_id,
                                             *task, safety_distance);
    total += shaped_bid(base, flagged);
  }
  return total;
}

namespace {

// Depth-first enumeration over "robot i takes task t or stays idle" with an
// incrementally maintained objective. The pairwise conflict relation is
// symmetric (swapping the pair swaps both the cone axis and the relative
// velocity's sign, preserving the angle between them), so a pair contributes
// its base reward exactly while its conflict count is zero.
class Enumerator {
 public:
  Enumerator(const World& world, double safety_distance, double speed)
      : world_(world), n_robots_(world.robots.size()),
        n_tasks_(world.tasks.size()) {
    base_.assign(n_robots_ * n_tasks_, 0.0);
    for (std::size_t r = 0; r < n_robots_; ++r) {
      for (std::size_t t = 0; t < n_tasks_; ++t) {
        base_[r * n_tasks_ + t] = time_discounted_reward(
            world.robots[r].position, world.tasks[t], speed);
      }
    }
    // conflict[(r1,t1),(r2,t2)]: does r1 heading for t1 predict a collision
    // with r2 heading for t2? Precomputed once; positions never change.
    const std::size_t cells = n_robots_ * n_tasks_;
    conflict_.assign(cells * cells, false);
    for (std::size_t r1 = 0; r1 < n_robots_; ++r1) {
      for (std::size_t r2 = 0; r2 < n_robots_; ++r2) {
        if (r1 == r2) continue;
        const CollisionCone cone =
            build_cone(world.robots[r1].position, world.robots[r2].position,
                       safety_distance);
        for (std::size_t t1 = 0; t1 < n_tasks_; ++t1) {
          const Vec2 v1 = (world.tasks[t1].location - world.robots[r1].position)
                              .normalized_or_zero();
          for (std::size_t t2 = 0; t2 < n_tasks_; ++t2) {
            const Vec2 v2 =
                (world.tasks[t2].location - world.robots[r2].position)
                    .normalized_or_zero();
            conflict_[(r1 * n_tasks_ + t1) * cells + (r2 * n_tasks_ + t2)] =
                relative_velocity_in_cone(cone, v1, v2);
          }
        }
      }
    }
  }

  void run() {
    chosen_task_.assign(n_robots_, -1);
    conflict_count_.assign(n_robots_, 0);
    task_used_.assign(n_tasks_, false);
    value_ = 0.0;
    best_value_ = 0.0;
    best_choice_.assign(n_robots_, -1);
    descend(0);
  }

  double best_value() const { return best_value_; }

  AssignmentSet best_assignment() const {
    AssignmentSet out;
    for (std::size_t r = 0; r < n_robots_; ++r) {
      if (best_choice_[r] >= 0) {
        out.insert(world_.robots[r].id, world_.tasks[best_choice_[r]].id);
      }
    }
    return out;
  }

 private:
  void descend(std::size_t robot) {
    if (robot == n_robots_) {
      if (value_ > best_value_) {
        best_value_ = value_;
        best_choice_ = chosen_task_;
      }
      return;
    }
    descend(robot + 1);  // leave this robot idle
    for (std::size_t t = 0; t < n_tasks_; ++t) {
      if (task_used_[t]) continue;
      add(robot, t);
      descend(robot + 1);
      remove(robot, t);
    }
  }

  void add(std::size_t robot, std::size_t task) {
    const std::size_t cells = n_robots_ * n_tasks_;
    const std::size_t own = robot * n_tasks_ + task;
    int own_conflicts = 0;
    for (std::size_t r = 0; r < robot; ++r) {
      if (chosen_task_[r] < 0) continue;
      const std::size_t other =
          r * n_tasks_ + static_cast<std::size_t>(chosen_task_[r]);
      if (conflict_[own * cells + other]) {
        ++own_conflicts;
        if (conflict_count_[r]++ == 0) value_ -= base_[other];
      }
    }
    conflict_count_[robot] = own_conflicts;
    if (own_conflicts == 0) value_ += base_[own];
    chosen_task_[robot] = static_cast<int>(task);
    task_used_[task] = true;
  }

  void remove(std::size_t robot, std::size_t task) {
    const std::size_t cells = n_robots_ * n_tasks_;
    const std::size_t own = robot * n_tasks_ + task;
    if (conflict_count_[robot] == 0) value_ -= base_[own];
    for (std::size_t r = 0; r < robot; ++r) {
      if (chosen_task_[r] < 0) continue;
      const std::size_t other =
          r * n_tasks_ + static_cast<std::size_t>(chosen_task_[r]);
      if (conflict_[own * cells + other]) {
        if (--conflict_count_[r] == 0) value_ += base_[other];
      }
    }
    chosen_task_[robot] = -1;
    task_used_[task] = false;
  }

  const World& world_;
  std::size_t n_robots_;
  std::size_t n_tasks_;
  std::vector<double> base_;
  std::vector<char> conflict_;
  std::vector<int> chosen_task_;
  std::vector<int> conflict_count_;
  std::vector<char> task_used_;
  double value_ = 0.0;
  double best_value_ = 0.0;
  std::vector<int> best_choice_;
};

}  // namespace

ObjectiveReport brute_force_optimum(const World& world, double safety_distance,
                                    double speed) {
  if (std::min(world.robots.size(), world.tasks.size()) > 8) {
    throw std::domain_error(
        "brute_force_optimum: refusing instances with min(robots, tasks) > 8");
  }

  Enumerator enumerator(world, safety_distance, speed);
  enumerator.run();

  ObjectiveReport report;
  report.optimal_value = enumerator.best_value();
  report.optimal_assignment = enumerator.best_assignment();

  AuctionConfig fixed;
  fixed.initial_safety_distance = safety_distance;
  fixed.min_safety_distance = safety_distance;  // horizon disabled
  fixed.speed = speed;
  const AuctionResult auction = run_cata(world, fixed);
  report.auction_sequential_value = auction.objective_value;
  report.auction_value = evaluate_objective(world, auction.assignments,
                                            safety_distance, speed);
  report.ratio = report.optimal_value > 0.0
                     ? report.auction_value / report.optimal_value
                     : 1.0;
  return report;
}

BoundCheckReport run_bound_check(const BoundCheckConfig& config) {
  if (config.instances < 1 || config.n_min < 1 ||
      config.n_max < config.n_min || config.n_max > 8 ||
      !(config.position_sigma > 0.0) || !(config.speed > 0.0) ||
      !(config.auction_value_scale > 0.0)) {
    throw std::invalid_argument("bound check: bad config");
  }
  if (config.safety_distance.has_value() &&
      !(*config.safety_distance > 0.0)) {
    throw std::invalid_argument("bound check: safety distance must be > 0");
  }

  BoundCheckReport report;
  report.instances = config.instances;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = -std::numeric_limits<double>::infinity();

  double ratio_sum = 0.0;
  for (int k = 0; k < config.instances; ++k) {
    const std::uint64_t instance_seed =
        mix_seed(config.seed, static_cast<std::uint64_t>(k) + 1);
    std::mt19937_64 rng(instance_seed);
    const std::uint64_t span =
        static_cast<std::uint64_t>(config.n_max - config.n_min) + 1;
    const int n = config.n_min + static_cast<int>(rng() % span);

    std::normal_distribution<double> coord(0.0, config.position_sigma);
    std::vector<Robot> robots;
    std::vector<Task> tasks;
    for (int i = 0; i < n; ++i) {
      robots.push_back({i, {coord(rng), coord(rng)}, 0.25});
    }
    for (int i = 0; i < n; ++i) {
      tasks.push_back({i, {coord(rng), coord(rng)}, 100.0, 0.95});
    }
    const World world = make_world(std::move(robots), std::move(tasks));

    const double safety =
        config.safety_distance.has_value()
            ? *config.safety_distance
            : 0.5 + 2.5 * (static_cast<double>(rng() >> 11) * 0x1p-53);

    const ObjectiveReport scored =
        brute_force_optimum(world, safety, config.speed);
    const double ratio =
        scored.optimal_value > 0.0
            ? scored.auction_value * config.auction_value_scale /
                  scored.optimal_value
            : 1.0;

    ratio_sum += ratio;
    report.min_ratio = std::min(report.min_ratio, ratio);
    report.max_ratio = std::max(report.max_ratio, ratio);
    if (ratio < kGuaranteedRatio - kRatioSlack) {
      report.violations.push_back({instance_seed, n, safety, ratio});
    }
  }
  report.mean_ratio = ratio_sum / config.instances;
  return report;
}

}  // namespace cata
