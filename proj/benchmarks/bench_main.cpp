// Microbenchmarks for the hot paths: cone tests dominate bid shaping, bid
// shaping dominates the auction, and the auction plus the step loop dominate
// a batch. Run with --benchmark_min_time=<seconds> to tighten the numbers.

#include <benchmark/benchmark.h>

#include "cata/auction.hpp"
#include "cata/geometry.hpp"
#include "cata/oracle.hpp"
#include "cata/rewards.hpp"
#include "cata/scenarios.hpp"
#include "cata/sim.hpp"

namespace {

cata::World grid_world(int rows, int cols) {
  cata::WorldSpec spec;
  spec.name = "bench";
  spec.robots = cata::GridLayout{rows, cols, 2.5};
  spec.tasks = cata::NormalTasks{rows * cols, 3.0, 3.0, {0.0, 0.0}};
  return cata::generate_world(spec, 7);
}

void cone_membership(benchmark::State& state) {
  const cata::CollisionCone cone =
      cata::build_cone({0.0, 0.0}, {8.0, 3.0}, 1.5);
  const cata::Vec2 own_vel{1.0, 0.35};
  const cata::Vec2 other_vel{-0.4, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cata::relative_velocity_in_cone(cone, own_vel, other_vel));
  }
}
BENCHMARK(cone_membership);

void closest_approach(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cata::min_future_separation(
        {0.0, 0.0}, {1.0, 0.35}, {8.0, 3.0}, {-0.4, 0.1}));
  }
}
BENCHMARK(closest_approach);

void highest_bid_25(benchmark::State& state) {
  const cata::World world = grid_world(5, 5);
  cata::AssignmentSet committed;
  for (int r = 0; r < 12; ++r) {
    committed.insert(r, r);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cata::local_highest_bid(
        world, committed, world.robots.back().id, 2.0, 1.0, true));
  }
}
BENCHMARK(highest_bid_25);

void auction_25(benchmark::State& state) {
  const cata::World world = grid_world(5, 5);
  const cata::AuctionConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cata::run_cata(world, config));
  }
}
BENCHMARK(auction_25);

void exact_optimum_6(benchmark::State& state) {
  const cata::World world = grid_world(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cata::brute_force_optimum(world, 1.0, 1.0));
  }
}
BENCHMARK(exact_optimum_6);

void trial_9(benchmark::State& state) {
  const cata::World world = grid_world(3, 3);
  const cata::AuctionResult plan = cata::run_cata(world, {});
  cata::SimConfig sim;
  sim.safety_zone_radius = 1.2;
  sim.maneuver_cone_distance = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cata::run_trial(world, plan.assignments, sim));
  }
}
BENCHMARK(trial_9);

}  // namespace

BENCHMARK_MAIN();
