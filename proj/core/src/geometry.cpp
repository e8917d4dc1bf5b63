#include "cata/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cata {

namespace {
// Unit-axis drift tolerance for sanity checks on cone construction.
constexpr double kAxisTolerance = 1e-9;
}  // namespace

CollisionCone build_cone(const Vec2& own_pos, const Vec2& other_pos,
                         double safety_distance) {
  if (!own_pos.finite() || !other_pos.finite()) {
    throw std::invalid_argument("build_cone: non-finite position");
  }
  if (!(safety_distance > 0.0) || !std::isfinite(safety_distance)) {
    throw std::invalid_argument("build_cone: safety_distance must be > 0");
  }

  CollisionCone cone;
  cone.apex = own_pos;
  cone.safety_distance = safety_distance;

  const Vec2 delta = other_pos - own_pos;
  const double d = delta.norm();
  cone.center_distance = d;

  if (d <= safety_distance) {
    cone.degenerate = true;
    return cone;
  }

  cone.axis = delta / d;
  cone.half_angle = std::asin(safety_distance / d);

  // The axis must come out unit length; anything else indicates a numeric
  // problem upstream worth failing loudly on.
  if (std::abs(cone.axis.norm() - 1.0) > kAxisTolerance) {
    throw std::invalid_argument("build_cone: degenerate axis");
  }
  return cone;
}

double angle_between(const Vec2& a, const Vec2& b) {
  return std::atan2(std::abs(a.cross(b)), a.dot(b));
}

bool relative_velocity_in_cone(const CollisionCone& cone,
                               const Vec2& own_velocity,
                               const Vec2& other_velocity) {
  if (cone.degenerate) {
    return true;
  }
  const Vec2 rel = own_velocity - other_velocity;
  if (rel.norm_sq() == 0.0) {
    return false;
  }
  return angle_between(rel, cone.axis) < cone.half_angle;
}

double min_future_separation(const Vec2& own_pos, const Vec2& own_velocity,
                             const Vec2& other_pos,
                             const Vec2& other_velocity) {
  const Vec2 p = own_pos - other_pos;
  const Vec2 v = own_velocity - other_velocity;
  const double vv = v.norm_sq();
  if (vv == 0.0) {
    return p.norm();
  }
  // ||p + v t||^2 is a parabola in t; its unconstrained minimiser is
  // t* = -(p.v)/(v.v), clamped to the future.
  double t = -p.dot(v) / vv;
  if (t < 0.0) {
    t = 0.0;
  }
  return (p + v * t).norm();
}

}  // namespace cata
