#include <cmath>
#include <random>
#include <stdexcept>

#include "cata/geometry.hpp"
#include "doctest.h"

using namespace cata;

TEST_CASE("cone half angle matches the closed form") {
  const CollisionCone cone = build_cone({0, 0}, {2, 0}, 1.0);
  CHECK(!cone.degenerate);
  CHECK(cone.center_distance == doctest::Approx(2.0));
  CHECK(cone.axis.x == doctest::Approx(1.0));
  CHECK(cone.axis.y == doctest::Approx(0.0));
  // asin(1/2), frozen from an independent evaluation.
  CHECK(cone.half_angle == doctest::Approx(0.5235987755982989).epsilon(1e-15));
}

TEST_CASE("half angle approaches a right angle as the pair closes in") {
  const CollisionCone cone = build_cone({0, 0}, {1.0 + 1e-9, 0}, 1.0);
  CHECK(cone.half_angle > 1.5707);
  CHECK(cone.half_angle <= std::asin(1.0));
}

TEST_CASE("cone construction rejects bad input") {
  CHECK_THROWS_AS(build_cone({0, 0}, {1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_cone({0, 0}, {1, 0}, -1.0), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(build_cone({nan, 0}, {1, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("pairs already within the safety distance are degenerate") {
  const CollisionCone cone = build_cone({0, 0}, {0.5, 0}, 1.0);
  CHECK(cone.degenerate);
  // Even a diverging relative velocity counts as a predicted collision.
  CHECK(relative_velocity_in_cone(cone, {-1, 0}, {1, 0}));
}

TEST_CASE("head-on approach is inside, a wide approach is outside") {
  const CollisionCone cone = build_cone({0, 0}, {2, 0}, 1.0);
  CHECK(relative_velocity_in_cone(cone, {1, 0}, {0, 0}));

  const double forty = 40.0 * std::acos(-1.0) / 180.0;
  const Vec2 wide{std::cos(forty), std::sin(forty)};
  CHECK(!relative_velocity_in_cone(cone, wide, {0, 0}));
  // Closest pass for the 40 degree heading: 2 sin(40deg), frozen.
  CHECK(min_future_separation({0, 0}, wide, {2, 0}, {0, 0}) ==
        doctest::Approx(1.2855752193730785).epsilon(1e-12));
}

TEST_CASE("a velocity exactly on the boundary is outside") {
  const CollisionCone cone = build_cone({0, 0}, {2, 0}, 1.0);
  // Axis-aligned construction keeps the angle comparison exact on this libm.
  const Vec2 boundary{std::cos(cone.half_angle), std::sin(cone.half_angle)};
  CHECK(!relative_velocity_in_cone(cone, boundary, {0, 0}));
  CHECK(relative_velocity_in_cone(
      cone, Vec2{1, 0}.rotated(cone.half_angle - 1e-9), {0, 0}));
  CHECK(!relative_velocity_in_cone(
      cone, Vec2{1, 0}.rotated(cone.half_angle + 1e-9), {0, 0}));
}

TEST_CASE("zero relative velocity never predicts a collision") {
  const CollisionCone cone = build_cone({0, 0}, {2, 0}, 1.0);
  CHECK(!relative_velocity_in_cone(cone, {0.7, -0.3}, {0.7, -0.3}));
  CHECK(min_future_separation({0, 0}, {0.7, -0.3}, {2, 0}, {0.7, -0.3}) ==
        doctest::Approx(2.0));
}

TEST_CASE("closest future pass matches the perpendicular-miss form") {
  // Nearly head-on with a slight vertical slip; the miss distance is the
  // perpendicular distance from the relative line: |p x v| / |v|.
  CHECK(min_future_separation({0, 0}, {1, 0.1}, {2, 0}, {0, 0}) ==
        doctest::Approx(0.19900743804199786).epsilon(1e-12));
  // Receding pair: the minimum is the current separation.
  CHECK(min_future_separation({0, 0}, {-1, 0}, {2, 0}, {0, 0}) ==
        doctest::Approx(2.0));
}

TEST_CASE("membership is equivalent to the future pass dropping below the "
          "safety distance") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  std::uniform_real_distribution<double> safety(0.2, 3.0);

  int tested = 0;
  while (tested < 10000) {
    const Vec2 pi{coord(rng), coord(rng)};
    const Vec2 pj{coord(rng), coord(rng)};
    const double d = safety(rng);
    if (distance(pi, pj) <= d) continue;
    const Vec2 vi{vel(rng), vel(rng)};
    const Vec2 vj{vel(rng), vel(rng)};
    if ((vi - vj).norm() < 1e-9) continue;
    const double closest = min_future_separation(pi, vi, pj, vj);
    if (std::abs(closest - d) < 1e-6) continue;  // boundary band excluded

    const CollisionCone cone = build_cone(pi, pj, d);
    const bool inside = relative_velocity_in_cone(cone, vi, vj);
    REQUIRE_MESSAGE(inside == (closest < d),
                    "disagreement at config " << tested);
    ++tested;
  }
}

TEST_CASE("membership is symmetric in the pair") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  for (int k = 0; k < 2000; ++k) {
    const Vec2 pi{coord(rng), coord(rng)};
    const Vec2 pj{coord(rng), coord(rng)};
    const Vec2 vi{vel(rng), vel(rng)};
    const Vec2 vj{vel(rng), vel(rng)};
    if (distance(pi, pj) == 0.0) continue;
    const double d = 1.0;
    const bool ij = relative_velocity_in_cone(build_cone(pi, pj, d), vi, vj);
    const bool ji = relative_velocity_in_cone(build_cone(pj, pi, d), vj, vi);
    CHECK(ij == ji);
  }
}

TEST_CASE("membership depends only on the relative direction") {
  const CollisionCone cone = build_cone({0, 0}, {3, 1}, 1.0);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  for (int k = 0; k < 500; ++k) {
    const Vec2 vi{vel(rng), vel(rng)};
    const Vec2 vj{vel(rng), vel(rng)};
    const Vec2 rel = vi - vj;
    for (const double s : {0.1, 3.7, 25.0}) {
      CHECK(relative_velocity_in_cone(cone, vi, vj) ==
            relative_velocity_in_cone(cone, vj + rel * s, vj));
    }
  }
}
