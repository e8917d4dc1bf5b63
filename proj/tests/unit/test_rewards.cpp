#include <random>
#include <stdexcept>

#include "cata/geometry.hpp"
#include "cata/rewards.hpp"
#include "doctest.h"

using namespace cata;

namespace {
World two_parallel_robots() {
  // Robots stacked 3 m apart, tasks straight east of each: parallel runs.
  return make_world(
      {{0, {0, 0}, 0.25}, {1, {0, 3}, 0.25}},
      {{0, {10, 0}, 100.0, 0.95}, {1, {10, 3}, 100.0, 0.95}});
}
}  // namespace

TEST_CASE("reward decays with travel time") {
  const Task task{0, {2, 0}, 10.0, 0.9};
  // 0.9^2 * 10, frozen from an independent evaluation.
  CHECK(time_discounted_reward({0, 0}, task, 1.0) ==
        doctest::Approx(8.100000000000001).epsilon(1e-14));
  // Twice the speed halves the travel time.
  CHECK(time_discounted_reward({0, 0}, task, 2.0) == doctest::Approx(9.0));
  // Standing on the task keeps the full value.
  CHECK(time_discounted_reward({2, 0}, task, 1.0) == doctest::Approx(10.0));
}

TEST_CASE("reward rejects bad speed") {
  const Task task{0, {2, 0}, 10.0, 0.9};
  CHECK_THROWS_AS(time_discounted_reward({0, 0}, task, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(time_discounted_reward({0, 0}, task, -1.0),
                  std::invalid_argument);
}

TEST_CASE("shaped bid passes through or voids") {
  CHECK(shaped_bid(5.0, false) == 5.0);
  CHECK(shaped_bid(5.0, true) == 0.0);
  CHECK(shaped_bid(0.0, true) == 0.0);
  CHECK_THROWS_AS(shaped_bid(-1.0, false), std::invalid_argument);
}

TEST_CASE("parallel runs keep the bid") {
  const World world = two_parallel_robots();
  AssignmentSet assigned;
  assigned.insert(1, 1);  // robot 1 heads east along its own row
  CHECK(!collision_predicted(world, assigned, 0, world.tasks[0], 1.0));
}

TEST_CASE("a crossing path voids the bid") {
  // Robot 1 already heads for the task on robot 0's row; bidding on the task
  // in robot 1's row would cut straight through its course.
  const World world = make_world(
      {{0, {0, 0}, 0.25}, {1, {0, 3}, 0.25}},
      {{0, {10, 0}, 100.0, 0.95}, {1, {10, 3}, 100.0, 0.95}});
  AssignmentSet assigned;
  assigned.insert(1, 0);
  CHECK(collision_predicted(world, assigned, 0, world.tasks[1], 1.0));
  // The independent route agrees: unit headings pass well inside 1 m.
  const Vec2 v0 = (world.tasks[1].location - Vec2{0, 0}).normalized_or_zero();
  const Vec2 v1 = (world.tasks[0].location - Vec2{0, 3}).normalized_or_zero();
  CHECK(min_future_separation({0, 0}, v0, {0, 3}, v1) < 1.0);
}

TEST_CASE("neighbours inside the safety distance always flag") {
  const World world = make_world(
      {{0, {0, 0}, 0.25}, {1, {0.4, 0}, 0.25}},
      {{0, {10, 0}, 100.0, 0.95}, {1, {-10, 0}, 100.0, 0.95}});
  AssignmentSet assigned;
  assigned.insert(1, 1);  // heading away, but already too close
  CHECK(collision_predicted(world, assigned, 0, world.tasks[0], 1.0));
}

TEST_CASE("robot standing on a task bids with a zero heading") {
  const World world = make_world(
      {{0, {10, 0}, 0.25}, {1, {0, 3}, 0.25}},
      {{0, {10, 0}, 100.0, 0.95}, {1, {10, 3}, 100.0, 0.95}});
  AssignmentSet assigned;
  assigned.insert(1, 1);
  // Robot 0 sits on task 0; its intended velocity is zero and robot 1 passes
  // 3 m away, so no collision is predicted.
  CHECK(!collision_predicted(world, assigned, 0, world.tasks[0], 1.0));
}

TEST_CASE("growing the assignment set never clears a flag") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> coord(-8.0, 8.0);
  for (int k = 0; k < 300; ++k) {
    std::vector<Robot> robots;
    std::vector<Task> tasks;
    for (int i = 0; i < 5; ++i) {
      robots.push_back({i, {coord(rng), coord(rng)}, 0.25});
      tasks.push_back({i, {coord(rng), coord(rng)}, 100.0, 0.95});
    }
    const World world = make_world(robots, tasks);

    AssignmentSet small;
    small.insert(1, 1);
    AssignmentSet large = small;
    large.insert(2, 2);
    large.insert(3, 3);

    const bool flag_small =
        collision_predicted(world, small, 0, world.tasks[0], 1.0);
    const bool flag_large =
        collision_predicted(world, large, 0, world.tasks[0], 1.0);
    if (flag_small) CHECK(flag_large);
    CHECK(shaped_bid(1.0, flag_large) <= shaped_bid(1.0, flag_small));
  }
}
