#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

namespace lcgp {

struct Bounds {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 1.0;
  double ymax = 1.0;

  bool contains(const Eigen::Vector2d& p) const {
    return p.x() >= xmin && p.x() <= xmax && p.y() >= ymin && p.y() <= ymax;
  }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

struct RectObstacle {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;
};

struct CircleObstacle {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double radius = 0.0;
};

using Obstacle = std::variant<RectObstacle, CircleObstacle>;

enum class Complexity { kLow, kMedium, kHigh };

struct Environment {
  Bounds bounds;
  std::vector<Obstacle> obstacles;
  Complexity complexity = Complexity::kLow;
};

// All tests are closed-set: boundary contact counts as containment/intersection.
bool point_in_obstacle(const Eigen::Vector2d& p, const Obstacle& obstacle);
bool segment_obstacle_intersect(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                                const Obstacle& obstacle);

bool collision_free_point(const Environment& env, const Eigen::Vector2d& p);
bool collision_free_segment(const Environment& env, const Eigen::Vector2d& p,
                            const Eigen::Vector2d& q);

/// Distance from p to the obstacle boundary; 0 when p is inside or on it.
/// closest (optional) receives the nearest boundary point.
double obstacle_clearance(const Eigen::Vector2d& p, const Obstacle& obstacle,
                          Eigen::Vector2d* closest = nullptr);

}  // namespace lcgp
