#include "lcgp/environment.hpp"

#include <algorithm>
#include <cmath>

namespace lcgp {

namespace {

constexpr double kGeomTol = 1e-12;

bool point_in_rect(const Eigen::Vector2d& p, const RectObstacle& r) {
  return p.x() >= r.xmin - kGeomTol && p.x() <= r.xmax + kGeomTol &&
         p.y() >= r.ymin - kGeomTol && p.y() <= r.ymax + kGeomTol;
}

// Closed segment vs closed axis-aligned box, slab clipping.
bool segment_rect_intersect(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                            const RectObstacle& r) {
  double t0 = 0.0;
  double t1 = 1.0;
  const double d[2] = {q.x() - p.x(), q.y() - p.y()};
  const double lo[2] = {r.xmin, r.ymin};
  const double hi[2] = {r.xmax, r.ymax};
  const double s[2] = {p.x(), p.y()};
  for (int axis = 0; axis < 2; ++axis) {
    if (std::abs(d[axis]) <= kGeomTol) {
      if (s[axis] < lo[axis] - kGeomTol || s[axis] > hi[axis] + kGeomTol) return false;
      continue;
    }
    double ta = (lo[axis] - s[axis]) / d[axis];
    double tb = (hi[axis] - s[axis]) / d[axis];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1 + kGeomTol) return false;
  }
  return true;
}

Eigen::Vector2d closest_point_on_segment(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                                         const Eigen::Vector2d& x) {
  const Eigen::Vector2d d = q - p;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return p;
  const double t = std::clamp((x - p).dot(d) / len2, 0.0, 1.0);
  return p + t * d;
}

bool segment_circle_intersect(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                              const CircleObstacle& c) {
  const Eigen::Vector2d nearest = closest_point_on_segment(p, q, c.center);
  return (nearest - c.center).norm() <= c.radius + kGeomTol;
}

}  // namespace

bool point_in_obstacle(const Eigen::Vector2d& p, const Obstacle& obstacle) {
  return std::visit(
      [&](const auto& shape) -> bool {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          return point_in_rect(p, shape);
        } else {
          return (p - shape.center).norm() <= shape.radius + kGeomTol;
        }
      },
      obstacle);
}

bool segment_obstacle_intersect(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                                const Obstacle& obstacle) {
  return std::visit(
      [&](const auto& shape) -> bool {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          return segment_rect_intersect(p, q, shape);
        } else {
          return segment_circle_intersect(p, q, shape);
        }
      },
      obstacle);
}

bool collision_free_point(const Environment& env, const Eigen::Vector2d& p) {
  for (const Obstacle& obstacle : env.obstacles) {
    if (point_in_obstacle(p, obstacle)) return false;
  }
  return true;
}

bool collision_free_segment(const Environment& env, const Eigen::Vector2d& p,
                            const Eigen::Vector2d& q) {
  for (const Obstacle& obstacle : env.obstacles) {
    if (segment_obstacle_intersect(p, q, obstacle)) return false;
  }
  return true;
}

double obstacle_clearance(const Eigen::Vector2d& p, const Obstacle& obstacle,
                          Eigen::Vector2d* closest) {
  return std::visit(
      [&](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          const Eigen::Vector2d clamped(std::clamp(p.x(), shape.xmin, shape.xmax),
                                        std::clamp(p.y(), shape.ymin, shape.ymax));
          if ((clamped - p).norm() > 0.0) {
            if (closest != nullptr) *closest = clamped;
            return (clamped - p).norm();
          }
          // Inside: project to the nearest face.
          const double dx = std::min(p.x() - shape.xmin, shape.xmax - p.x());
          const double dy = std::min(p.y() - shape.ymin, shape.ymax - p.y());
          Eigen::Vector2d face = p;
          if (dx <= dy) {
            face.x() = (p.x() - shape.xmin <= shape.xmax - p.x()) ? shape.xmin : shape.xmax;
          } else {
            face.y() = (p.y() - shape.ymin <= shape.ymax - p.y()) ? shape.ymin : shape.ymax;
          }
          if (closest != nullptr) *closest = face;
          return 0.0;
        } else {
          const double to_center = (p - shape.center).norm();
          Eigen::Vector2d dir = to_center > 0.0 ? ((p - shape.center) / to_center).eval()
                                                : Eigen::Vector2d(1.0, 0.0);
          if (closest != nullptr) *closest = shape.center + shape.radius * dir;
          return std::max(0.0, to_center - shape.radius);
        }
      },
      obstacle);
}

}  // namespace lcgp
