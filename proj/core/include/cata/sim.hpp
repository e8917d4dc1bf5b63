#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cata/stigmergy.hpp"
#include "cata/world.hpp"

namespace cata {

struct SimConfig {
  double time_step = 0.1;
  double max_speed = 1.0;
  // Radius of the reactive layer's protected disc. Matches the auction's
  // default safety floor.
  double safety_zone_radius = 0.5;
  // Distance the maneuver trigger's cone protects. Unset means the zone
  // radius, so any predicted zone entry demands a course change; set it
  // smaller and the outer part of the zone becomes a tolerated band where
  // only spacing pressure applies. Must not exceed the zone radius.
  std::optional<double> maneuver_cone_distance;
  double arrival_threshold = 0.1;
  int max_steps = 5000;
  // A trial with no robot setting a new best distance-to-goal for this many
  // consecutive steps is declared deadlocked.
  int stagnation_window = 200;
  // Scales the zone-penetration repulsion (1.0 = max_speed at full overlap).
  double repulsion_gain = 1.0;
};

struct RobotState {
  int id = -1;
  Vec2 position;
  Vec2 velocity;
  std::optional<int> assigned_task;
  bool arrived = false;
  double radius = 0.25;
};

struct TrialMetrics {
  int avoidance_count = 0;      // cone-triggered maneuvers, per pair episode
  int maintain_one_count = 0;   // zone pressure from exactly one neighbour
  int maintain_multi_count = 0; // zone pressure from two or more at once
  bool deadlock = false;
  int completion_steps = 0;
  double min_separation_observed = 0.0;
};

// Per-robot activity flags for trace output, valid for one step.
struct StepFlags {
  bool avoiding = false;
  int maintaining = 0;  // neighbours currently applying zone pressure
};

using StepCallback = std::function<void(
    int step, const std::vector<RobotState>&, const std::vector<StepFlags>&)>;

// Kinematic rollout of an assignment: robots drive straight at their tasks
// at max speed, with a reactive layer that rotates away from predicted
// conflicts and holds spacing inside the safety zone. All updates read the
// previous step's snapshot, so robot order never matters. Deterministic;
// no randomness anywhere.
class TrialSim {
 public:
  TrialSim(const World& world, const AssignmentSet& assignments,
           const SimConfig& config);

  // Runs to completion, deadlock, or the step cap.
  TrialMetrics run(const StepCallback& on_step = nullptr);

  const std::vector<RobotState>& robots() const { return robots_; }

 private:
  struct PairEpisode {
    bool open = false;
    int gap = 0;
  };
  struct MaintainEpisode {
    bool open = false;
    int gap = 0;
    int peak_neighbours = 0;
  };

  bool pair_in_threat(std::size_t i, const Vec2& velocity_i,
                      std::size_t j) const;
  Vec2 desired_velocity(std::size_t i) const;
  Vec2 resolve_maneuver(std::size_t i, const Vec2& desired,
                        const std::vector<std::size_t>& threats) const;
  void close_maintain_episode(std::size_t i);

  SimConfig config_;
  double cone_distance_ = 0.0;
  std::vector<RobotState> robots_;
  std::vector<Vec2> goals_;         // valid where assigned
  std::vector<double> best_goal_distance_;
  std::vector<PairEpisode> pair_episodes_;   // upper-triangle pair index
  std::vector<MaintainEpisode> maintain_episodes_;
  TrialMetrics metrics_;
  std::size_t pair_index(std::size_t i, std::size_t j) const;
};

// Convenience wrapper.
TrialMetrics run_trial(const World& world, const AssignmentSet& assignments,
                       const SimConfig& config,
                       const StepCallback& on_step = nullptr);

}  // namespace cata
