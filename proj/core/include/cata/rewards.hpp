#pragma once

#include "cata/stigmergy.hpp"
#include "cata/world.hpp"

namespace cata {

// Value of a task to a robot, decayed by the straight-line travel time:
// discount^(distance/speed) * inherent_value. Throws std::invalid_argument
// on speed <= 0 or a non-finite position.
double time_discounted_reward(const Vec2& robot_pos, const Task& task,
                              double speed);

// True when heading to the candidate task would put the robot on a predicted
// collision course with any already-assigned neighbour. Each party's intended
// velocity is the unit vector toward its task (zero for a robot standing on
// its task). Neighbours closer than the safety distance predict a collision
// regardless of heading. Entries for robot_id itself are ignored, so the set
// may contain the robot's own pair when re-evaluating a full assignment.
bool collision_predicted(const World& world, const AssignmentSet& assignments,
                         int robot_id, const Task& candidate,
                         double safety_distance);

// A predicted collision voids the bid; otherwise it passes through.
// Throws std::invalid_argument on a negative base.
double shaped_bid(double base, bool collision_flag);

}  // namespace cata
