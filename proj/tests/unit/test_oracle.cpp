#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cata/oracle.hpp"
#include "cata/world.hpp"
#include "doctest.h"

using namespace cata;

namespace {

World random_world(std::mt19937_64& rng, int n_robots, int n_tasks,
                   double spread = 8.0) {
  std::uniform_real_distribution<double> coord(-spread, spread);
  std::vector<Robot> r;
  std::vector<Task> t;
  for (int i = 0; i < n_robots; ++i)
    r.push_back({i, {coord(rng), coord(rng)}, 0.25});
  for (int i = 0; i < n_tasks; ++i)
    t.push_back({i, {coord(rng), coord(rng)}, 100.0, 0.95});
  return make_world(std::move(r), std::move(t));
}

World fixed_world(std::vector<Vec2> robots, std::vector<Vec2> tasks) {
  std::vector<Robot> r;
  std::vector<Task> t;
  for (std::size_t i = 0; i < robots.size(); ++i)
    r.push_back({static_cast<int>(i), robots[i], 0.25});
  for (std::size_t i = 0; i < tasks.size(); ++i)
    t.push_back({static_cast<int>(i), tasks[i], 100.0, 0.95});
  return make_world(std::move(r), std::move(t));
}

AuctionConfig pinned(double safety_distance) {
  AuctionConfig config;
  config.initial_safety_distance = safety_distance;
  config.min_safety_distance = safety_distance;
  return config;
}

}  // namespace

TEST_CASE("committed bid sums match the joint re-evaluation at a fixed "
          "horizon") {
  // The cone test is symmetric in the pair, so a winner committed against
  // earlier winners stays clean when later winners are added. The sum of
  // sealed bids and the all-pairs evaluation may differ only by summation
  // order noise.
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 60; ++trial) {
    const int n_robots = 2 + static_cast<int>(rng() % 6);
    const int n_tasks = 2 + static_cast<int>(rng() % 6);
    const World world = random_world(rng, n_robots, n_tasks);
    const double safety = 0.5 + 2.5 * (rng() % 1000) / 1000.0;

    const AuctionResult result = run_cata(world, pinned(safety));
    const double joint =
        evaluate_objective(world, result.assignments, safety, 1.0);
    CHECK_MESSAGE(std::abs(result.objective_value - joint) <= 1e-9,
                  "trial ", trial, ": sequential ", result.objective_value,
                  " vs joint ", joint);
  }
}

TEST_CASE("a mutually crossing pair is worth exactly zero jointly") {
  const World world = fixed_world({{0, 0}, {0, 4}}, {{10, 4}, {10, 0}});
  AssignmentSet crossing;
  crossing.insert(0, 0);
  crossing.insert(1, 1);
  CHECK(evaluate_objective(world, crossing, 1.0, 1.0) == 0.0);

  AssignmentSet parallel;
  parallel.insert(0, 1);
  parallel.insert(1, 0);
  CHECK(evaluate_objective(world, parallel, 1.0, 1.0) > 100.0);
}

TEST_CASE("the optimum can leave a robot idle") {
  // Two robots facing each other across a tight task pair: any complete
  // matching sends them nearly head on (about 1.4 degrees off the line of
  // centres, inside asin(1/4)), so both pairs zero out and the best plan
  // assigns exactly one robot.
  const World world =
      fixed_world({{0, 0}, {4, 0}}, {{2, 0.05}, {2, -0.05}});
  const ObjectiveReport report = brute_force_optimum(world, 1.0, 1.0);

  // 0.95^sqrt(4.0025) * 100, one robot running half the gap
  CHECK(report.optimal_value ==
        doctest::Approx(90.24710723590604).epsilon(1e-13));
  CHECK(report.optimal_assignment.size() == 1);
  CHECK(report.ratio == 1.0);
  CHECK(report.auction_value ==
        doctest::Approx(report.optimal_value).epsilon(1e-13));
}

TEST_CASE("the reported optimum is consistent and dominates samples") {
  std::mt19937_64 rng(60601);
  for (int trial = 0; trial < 25; ++trial) {
    const int n_robots = 2 + static_cast<int>(rng() % 4);
    const int n_tasks = 2 + static_cast<int>(rng() % 4);
    const World world = random_world(rng, n_robots, n_tasks);
    const double safety = 0.5 + 2.0 * (rng() % 1000) / 1000.0;
    const ObjectiveReport report = brute_force_optimum(world, safety, 1.0);

    // Route one: the assignment the search returned re-scores to its value.
    const double rescored =
        evaluate_objective(world, report.optimal_assignment, safety, 1.0);
    CHECK(std::abs(rescored - report.optimal_value) <= 1e-9);

    // Route two: no sampled assignment beats it.
    for (int sample = 0; sample < 50; ++sample) {
      AssignmentSet candidate;
      std::vector<int> tasks(static_cast<std::size_t>(n_tasks));
      for (int i = 0; i < n_tasks; ++i) tasks[static_cast<std::size_t>(i)] = i;
      std::shuffle(tasks.begin(), tasks.end(), rng);
      std::size_t next = 0;
      for (int robot = 0; robot < n_robots && next < tasks.size(); ++robot) {
        if (rng() % 2 == 0) continue;  // robots may idle
        candidate.insert(robot, tasks[next++]);
      }
      const double value =
          evaluate_objective(world, candidate, safety, 1.0);
      CHECK(value <= report.optimal_value + 1e-9);
    }
  }
}

TEST_CASE("the auction keeps at least half the optimal value") {
  std::mt19937_64 rng(1848);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const World world = random_world(rng, n, n, 5.0);
    const double safety = 0.5 + 2.0 * (rng() % 1000) / 1000.0;
    const ObjectiveReport report = brute_force_optimum(world, safety, 1.0);
    CHECK_MESSAGE(report.ratio >= 0.5 - 1e-12, "trial ", trial, ": ratio ",
                  report.ratio);
    CHECK(report.ratio <= 1.0 + 1e-9);
    CHECK(std::abs(report.auction_value - report.auction_sequential_value) <=
          1e-9);
  }
}

TEST_CASE("exhaustive search refuses instances it cannot finish") {
  std::mt19937_64 rng(7);
  const World big = random_world(rng, 9, 9);
  CHECK_THROWS_AS(brute_force_optimum(big, 1.0, 1.0), std::domain_error);
  // Rectangular instances are fine as long as the short side fits.
  const World wide = random_world(rng, 2, 12);
  CHECK_NOTHROW(brute_force_optimum(wide, 1.0, 1.0));
}
