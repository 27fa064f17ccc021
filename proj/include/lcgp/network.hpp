#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lcgp {

// Raised when two robots occupy the same point: inter-robot distances appear
// in denominators of the information-vector weights, so zero-length edges have
// no defined direction.
struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Range-sensor model. gamma = 1 selects Gaussian range noise (sigma in
/// meters), gamma = 2 log-normal (sigma in log units). sensing_radius is the
/// horizon beyond which no measurement exists.
struct MeasurementModel {
  int gamma = 1;
  double sigma = 1.0;
  double sensing_radius = 6.0;

  void validate() const;
};

/// Positions of all robots at one timestep, anchors grouped first.
/// Column k of positions() is robot k; dim() is the spatial dimension.
class NetworkSnapshot {
 public:
  NetworkSnapshot(Eigen::MatrixXd positions, int n_anchor);

  static NetworkSnapshot from_points(const std::vector<Eigen::Vector2d>& points, int n_anchor);

  int dim() const { return static_cast<int>(positions_.rows()); }
  int size() const { return static_cast<int>(positions_.cols()); }
  int anchor_count() const { return n_anchor_; }
  int nonanchor_count() const { return size() - n_anchor_; }
  bool is_anchor(int robot) const { return robot < n_anchor_; }
  Eigen::VectorXd position(int robot) const { return positions_.col(robot); }
  const Eigen::MatrixXd& positions() const { return positions_; }

 private:
  Eigen::MatrixXd positions_;  // dim x n
  int n_anchor_ = 0;
};

enum class EdgeKind { kNonNon, kNonAnchor, kAnchorAnchor };

/// One measurement edge. For kNonAnchor edges i is the non-anchor robot.
struct MeasurementEdge {
  int i = 0;
  int j = 0;
  EdgeKind kind = EdgeKind::kNonNon;
  double length = 0.0;
};

struct MeasurementGraph {
  int n_robots = 0;
  std::vector<MeasurementEdge> edges;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists, all edge kinds

  // Incident edge count, all kinds.
  int neighbor_count(int robot) const;
  // Incident edges carrying information (NA + NN); anchor-anchor edges do not.
  int informative_neighbor_count(int robot) const;
};

/// Builds the sensing-horizon graph: edge (i, j) iff ||x_i - x_j|| <= radius,
/// boundary inclusive. Throws DegenerateGeometryError if two robots coincide.
MeasurementGraph build_measurement_graph(const NetworkSnapshot& snapshot,
                                         const MeasurementModel& model);

struct RangeObservation {
  int i = 0;  // non-anchor first for NA edges
  int j = 0;
  double range = 0.0;
};

struct RangeObservationSet {
  std::vector<RangeObservation> observations;
  std::uint64_t seed = 0;
};

/// Draws one noisy range per informative edge (anchor-anchor edges are
/// skipped). gamma = 1: range = L + e with e ~ N(0, sigma^2), redrawn while
/// the result is <= 0. gamma = 2: range = L * exp(e). Deterministic in seed.
RangeObservationSet simulate_ranges(const NetworkSnapshot& snapshot,
                                    const MeasurementModel& model, std::uint64_t seed);

}  // namespace lcgp
