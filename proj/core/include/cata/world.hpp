#pragma once

#include <vector>

#include "cata/vec2.hpp"

namespace cata {

struct Task {
  int id = -1;
  Vec2 location;
  double inherent_value = 100.0;
  double discount = 0.95;  // per-second decay factor in (0, 1]
};

struct Robot {
  int id = -1;
  Vec2 position;
  double radius = 0.25;
};

// Static problem instance shared by the auction and the simulator. Robots and
// tasks are kept sorted by id; ids must be unique within their kind.
struct World {
  std::vector<Robot> robots;
  std::vector<Task> tasks;

  const Robot* find_robot(int id) const;
  const Task* find_task(int id) const;

  double max_pairwise_robot_distance() const;
  double min_pairwise_robot_distance() const;
  double max_robot_radius() const;
};

// Sorts by id and validates: unique ids, finite coordinates, radius > 0,
// task value > 0, discount in (0, 1]. Throws std::invalid_argument.
World make_world(std::vector<Robot> robots, std::vector<Task> tasks);

}  // namespace cata
