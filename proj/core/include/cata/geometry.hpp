#pragma once

#include "cata/vec2.hpp"

namespace cata {

// Cone of relative velocities, anchored at one robot, that lead to a pass
// closer than the safety distance to another robot under straight-line motion.
// When the pair is already within the safety distance no such cone exists;
// the degenerate flag marks that case and membership tests treat it as
// "collision predicted regardless of heading".
struct CollisionCone {
  Vec2 apex;
  Vec2 axis;                     // unit vector toward the other robot
  double half_angle = 0.0;       // asin(safety / center_distance)
  double center_distance = 0.0;
  double safety_distance = 0.0;
  bool degenerate = false;
};

// Throws std::invalid_argument on non-finite positions or safety_distance <= 0.
CollisionCone build_cone(const Vec2& own_pos, const Vec2& other_pos,
                         double safety_distance);

// Unsigned angle in [0, pi] between two non-zero vectors.
double angle_between(const Vec2& a, const Vec2& b);

// Membership is strict: a relative velocity exactly on the cone boundary is
// outside. A zero relative velocity (parallel travel) is never inside a
// non-degenerate cone.
bool relative_velocity_in_cone(const CollisionCone& cone,
                               const Vec2& own_velocity,
                               const Vec2& other_velocity);

// Closed-form minimum separation the pair will reach at any time t >= 0 if
// both hold these velocities. Independent check of the cone construction:
// for non-degenerate geometry, membership above is equivalent to this value
// dropping below the safety distance.
double min_future_separation(const Vec2& own_pos, const Vec2& own_velocity,
                             const Vec2& other_pos, const Vec2& other_velocity);

}  // namespace cata
