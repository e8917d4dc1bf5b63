#include "cata/rewards.hpp"

#include <cmath>
#include <stdexcept>

#include "cata/geometry.hpp"

namespace cata {

namespace {
Vec2 intended_direction(const Vec2& from, const Vec2& to) {
  return (to - from).normalized_or_zero();
}
}  // namespace

double time_discounted_reward(const Vec2& robot_pos, const Task& task,
                              double speed) {
  if (!(speed > 0.0) || !std::isfinite(speed)) {
    throw std::invalid_argument("reward: speed must be > 0");
  }
  if (!robot_pos.finite()) {
    throw std::invalid_argument("reward: non-finite robot position");
  }
  const double tau = distance(robot_pos, task.location) / speed;
  return std::pow(task.discount, tau) * task.inherent_value;
}

bool collision_predicted(const World& world, const AssignmentSet& assignments,
                         int robot_id, const Task& candidate,
                         double safety_distance) {
  const Robot* self = world.find_robot(robot_id);
  if (self == nullptr) {
    throw std::invalid_argument("collision check: unknown robot");
  }
  const Vec2 own_velocity =
      intended_direction(self->position, candidate.location);

  for (const auto& [other_id, other_task_id] : assignments.by_robot()) {
    if (other_id == robot_id) continue;
    const Robot* other = world.find_robot(other_id);
    const Task* other_task = world.find_task(other_task_id);
    if (other == nullptr || other_task == nullptr) {
      throw std::invalid_argument("collision check: assignment references "
                                  "unknown robot or task");
    }
    const Vec2 other_velocity =
        intended_direction(other->position, other_task->location);
    const CollisionCone cone =
        build_cone(self->position, other->position, safety_distance);
    if (relative_velocity_in_cone(cone, own_velocity, other_velocity)) {
      return true;
    }
  }
  return false;
}

double shaped_bid(double base, bool collision_flag) {
  if (base < 0.0 || !std::isfinite(base)) {
    throw std::invalid_argument("shaped_bid: base must be >= 0 and finite");
  }
  return collision_flag ? 0.0 : base;
}

}  // namespace cata
