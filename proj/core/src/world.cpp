#include "cata/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cata {

const Robot* World::find_robot(int id) const {
  for (const auto& r : robots) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const Task* World::find_task(int id) const {
  for (const auto& t : tasks) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

double World::max_pairwise_robot_distance() const {
  double best = 0.0;
  for (std::size_t i = 0; i < robots.size(); ++i) {
    for (std::size_t j = i + 1; j < robots.size(); ++j) {
      best = std::max(best, distance(robots[i].position, robots[j].position));
    }
  }
  return best;
}

double World::min_pairwise_robot_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < robots.size(); ++i) {
    for (std::size_t j = i + 1; j < robots.size(); ++j) {
      best = std::min(best, distance(robots[i].position, robots[j].position));
    }
  }
  return best;
}

double World::max_robot_radius() const {
  double best = 0.0;
  for (const auto& r : robots) best = std::max(best, r.radius);
  return best;
}

World make_world(std::vector<Robot> robots, std::vector<Task> tasks) {
  std::sort(robots.begin(), robots.end(),
            [](const Robot& a, const Robot& b) { return a.id < b.id; });
  std::sort(tasks.begin(), tasks.end(),
            [](const Task& a, const Task& b) { return a.id < b.id; });

  for (std::size_t i = 0; i < robots.size(); ++i) {
    const Robot& r = robots[i];
    if (!r.position.finite() || !(r.radius > 0.0) || !std::isfinite(r.radius)) {
      throw std::invalid_argument("world: bad robot " + std::to_string(r.id));
    }
    if (i > 0 && robots[i - 1].id == r.id) {
      throw std::invalid_argument("world: duplicate robot id " +
                                  std::to_string(r.id));
    }
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    if (!t.location.finite() || !(t.inherent_value > 0.0) ||
        !std::isfinite(t.inherent_value) || !(t.discount > 0.0) ||
        !(t.discount <= 1.0)) {
      throw std::invalid_argument("world: bad task " + std::to_string(t.id));
    }
    if (i > 0 && tasks[i - 1].id == t.id) {
      throw std::invalid_argument("world: duplicate task id " +
                                  std::to_string(t.id));
    }
  }

  World w;
  w.robots = std::move(robots);
  w.tasks = std::move(tasks);
  return w;
}

}  // namespace cata
