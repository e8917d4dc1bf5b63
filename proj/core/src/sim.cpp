#include "cata/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cata/geometry.hpp"

namespace cata {

namespace {
// Progress smaller than this does not reset the stagnation clock.
constexpr double kProgressEpsilon = 1e-12;
}  // namespace

TrialSim::TrialSim(const World& world, const AssignmentSet& assignments,
                   const SimConfig& config)
    : config_(config),
      cone_distance_(
          config.maneuver_cone_distance.value_or(config.safety_zone_radius)) {
  if (!(config.time_step > 0.0) || !(config.max_speed > 0.0) ||
      !(config.safety_zone_radius > 0.0) || !(config.arrival_threshold > 0.0) ||
      config.max_steps < 1 || config.stagnation_window < 1 ||
      config.repulsion_gain < 0.0 || !(cone_distance_ > 0.0) ||
      cone_distance_ > config.safety_zone_radius) {
    throw std::invalid_argument("sim: bad config");
  }

  for (const auto& [robot_id, task_id] : assignments.by_robot()) {
    if (world.find_robot(robot_id) == nullptr ||
        world.find_task(task_id) == nullptr) {
      throw std::invalid_argument("sim: assignment references unknown robot "
                                  "or task");
    }
  }

  robots_.reserve(world.robots.size());
  goals_.resize(world.robots.size());
  for (std::size_t i = 0; i < world.robots.size(); ++i) {
    const Robot& r = world.robots[i];
    RobotState state;
    state.id = r.id;
    state.position = r.position;
    state.radius = r.radius;
    state.assigned_task = assignments.task_of(r.id);
    if (state.assigned_task.has_value()) {
      goals_[i] = world.find_task(*state.assigned_task)->location;
      state.arrived = distance(state.position, goals_[i]) <=
                      config_.arrival_threshold;
    }
    robots_.push_back(state);
  }

  best_goal_distance_.resize(robots_.size(), 0.0);
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    if (robots_[i].assigned_task.has_value()) {
      best_goal_distance_[i] = distance(robots_[i].position, goals_[i]);
    }
  }

  const std::size_t n = robots_.size();
  pair_episodes_.resize(n >= 2 ? n * (n - 1) / 2 : 0);
  maintain_episodes_.resize(n);

  metrics_.min_separation_observed = -1.0;  // no pairs
  if (n >= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        best = std::min(best, distance(robots_[i].position,
                                       robots_[j].position));
      }
    }
    metrics_.min_separation_observed = best;
  }
}

std::size_t TrialSim::pair_index(std::size_t i, std::size_t j) const {
  const std::size_t n = robots_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Vec2 TrialSim::desired_velocity(std::size_t i) const {
  const RobotState& r = robots_[i];
  if (r.arrived || !r.assigned_task.has_value()) return {};
  return (goals_[i] - r.position).normalized_or_zero() * config_.max_speed;
}

bool TrialSim::pair_in_threat(std::size_t i, const Vec2& velocity_i,
                              std::size_t j) const {
  // The evaluating robot contributes its intended velocity; the neighbour
  // contributes the velocity it actually drove last step.
  const Vec2 delta = robots_[j].position - robots_[i].position;
  const double dist = delta.norm();
  if (dist > cone_distance_) {
    const CollisionCone cone = build_cone(robots_[i].position,
                                          robots_[j].position, cone_distance_);
    return relative_velocity_in_cone(cone, velocity_i, robots_[j].velocity);
  }
  // Closer than the cone distance the full cone is degenerate, so the threat
  // question shrinks to whether actual body contact is ahead: the cone over
  // the summed radii. Everything else nearby is handled by spacing pressure.
  const double contact = robots_[i].radius + robots_[j].radius;
  if (dist > contact) {
    const CollisionCone body =
        build_cone(robots_[i].position, robots_[j].position, contact);
    return relative_velocity_in_cone(body, velocity_i, robots_[j].velocity);
  }
  // Already touching. Blocking every direction would freeze the pair in
  // place, so only motion that deepens the contact counts as a threat.
  const Vec2 rel = velocity_i - robots_[j].velocity;
  return rel.dot(delta) > 0.0;
}

Vec2 TrialSim::resolve_maneuver(std::size_t i, const Vec2& desired,
                                const std::vector<std::size_t>& threats) const {
  // Smallest rotation of the desired velocity that clears every active
  // threat. Counterclockwise is preferred on exact ties so an exactly
  // symmetric pair deflects to the same rotational side and passes instead
  // of mirroring each other back and forth.
  constexpr double kStep = std::numbers::pi / 360.0;
  for (int k = 0; k <= 360; ++k) {
    for (const int sign : {+1, -1}) {
      if (k == 0 && sign < 0) continue;
      const Vec2 candidate = desired.rotated(sign * k * kStep);
      bool clear = true;
      for (const std::size_t j : threats) {
        if (pair_in_threat(i, candidate, j)) {
          clear = false;
          break;
        }
      }
      if (clear) return candidate;
    }
  }
  return {};  // boxed in; hold position this step
}

void TrialSim::close_maintain_episode(std::size_t i) {
  MaintainEpisode& ep = maintain_episodes_[i];
  if (ep.peak_neighbours >= 2) {
    ++metrics_.maintain_multi_count;
  } else if (ep.peak_neighbours == 1) {
    ++metrics_.maintain_one_count;
  }
  ep = MaintainEpisode{};
}

TrialMetrics TrialSim::run(const StepCallback& on_step) {
  const std::size_t n = robots_.size();

  auto all_done = [&] {
    for (const RobotState& r : robots_) {
      if (r.assigned_task.has_value() && !r.arrived) return false;
    }
    return true;
  };

  if (all_done()) {
    metrics_.completion_steps = 0;
    return metrics_;
  }

  std::vector<Vec2> next_velocity(n);
  std::vector<StepFlags> flags(n);
  std::vector<std::vector<std::size_t>> threat_sets(n);
  int stall_steps = 0;
  bool finished = false;

  for (int step = 1; step <= config_.max_steps; ++step) {
    // Plan all velocities against the previous snapshot.
    for (std::size_t i = 0; i < n; ++i) {
      threat_sets[i].clear();
      flags[i] = StepFlags{};
      next_velocity[i] = Vec2{};
      const RobotState& r = robots_[i];
      if (r.arrived || !r.assigned_task.has_value()) continue;

      const Vec2 desired = desired_velocity(i);
      std::vector<std::pair<std::size_t, double>> maintainers;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double dist = distance(r.position, robots_[j].position);
        const bool threat = pair_in_threat(i, desired, j);
        if (threat) {
          threat_sets[i].push_back(j);
        } else if (dist <= config_.safety_zone_radius) {
          maintainers.emplace_back(j, dist);
        }
      }

      Vec2 v = threat_sets[i].empty()
                   ? desired
                   : resolve_maneuver(i, desired, threat_sets[i]);
      for (const auto& [j, dist] : maintainers) {
        const double push = config_.repulsion_gain * config_.max_speed *
                            (1.0 - dist / config_.safety_zone_radius);
        v += (r.position - robots_[j].position).normalized_or_zero() * push;
      }
      const double speed = v.norm();
      if (speed > config_.max_speed) {
        v = v * (config_.max_speed / speed);
      }
      next_velocity[i] = v;
      flags[i].avoiding = !threat_sets[i].empty();
      flags[i].maintaining = static_cast<int>(maintainers.size());
    }

    // Simultaneous integration, then arrivals.
    for (std::size_t i = 0; i < n; ++i) {
      RobotState& r = robots_[i];
      if (r.arrived || !r.assigned_task.has_value()) {
        r.velocity = Vec2{};
        continue;
      }
      r.position += next_velocity[i] * config_.time_step;
      r.velocity = next_velocity[i];
      if (distance(r.position, goals_[i]) <= config_.arrival_threshold) {
        r.arrived = true;
        r.velocity = Vec2{};
      }
    }

    // Observations: closest pass, then episode bookkeeping.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dist = distance(robots_[i].position, robots_[j].position);
        if (dist < metrics_.min_separation_observed) {
          metrics_.min_separation_observed = dist;
        }
        const bool cond =
            std::find(threat_sets[i].begin(), threat_sets[i].end(), j) !=
                threat_sets[i].end() ||
            std::find(threat_sets[j].begin(), threat_sets[j].end(), i) !=
                threat_sets[j].end();
        PairEpisode& ep = pair_episodes_[pair_index(i, j)];
        if (cond) {
          if (!ep.open) {
            ep.open = true;
            ++metrics_.avoidance_count;
          }
          ep.gap = 0;
        } else if (ep.open && ++ep.gap >= 2) {
          // One-step gaps bridge the episode; two consecutive quiet steps
          // close it, so boundary chatter is not double counted.
          ep = PairEpisode{};
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      MaintainEpisode& ep = maintain_episodes_[i];
      const int m = flags[i].maintaining;
      if (m > 0) {
        if (!ep.open) ep.open = true;
        ep.peak_neighbours = std::max(ep.peak_neighbours, m);
        ep.gap = 0;
      } else if (ep.open && ++ep.gap >= 2) {
        close_maintain_episode(i);
      }
    }

    metrics_.completion_steps = step;
    if (on_step) on_step(step, robots_, flags);

    if (all_done()) {
      finished = true;
      break;
    }

    bool progressed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!robots_[i].assigned_task.has_value()) continue;
      const double d = distance(robots_[i].position, goals_[i]);
      if (d < best_goal_distance_[i] - kProgressEpsilon) {
        best_goal_distance_[i] = d;
        progressed = true;
      }
    }
    stall_steps = progressed ? 0 : stall_steps + 1;
    if (stall_steps >= config_.stagnation_window) {
      break;
    }
  }

  metrics_.deadlock = !finished;
  for (std::size_t i = 0; i < n; ++i) {
    if (maintain_episodes_[i].open) close_maintain_episode(i);
  }
  return metrics_;
}

TrialMetrics run_trial(const World& world, const AssignmentSet& assignments,
                       const SimConfig& config, const StepCallback& on_step) {
  TrialSim sim(world, assignments, config);
  return sim.run(on_step);
}

}  // namespace cata
