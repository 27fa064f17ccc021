#include "lcgp/network.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace lcgp {

void MeasurementModel::validate() const {
  if (gamma != 1 && gamma != 2) {
    throw std::invalid_argument("MeasurementModel: gamma must be 1 or 2");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("MeasurementModel: sigma must be positive");
  }
  if (!(sensing_radius > 0.0)) {
    throw std::invalid_argument("MeasurementModel: sensing_radius must be positive");
  }
}

NetworkSnapshot::NetworkSnapshot(Eigen::MatrixXd positions, int n_anchor)
    : positions_(std::move(positions)), n_anchor_(n_anchor) {
  if (positions_.rows() < 2) {
    throw std::invalid_argument("NetworkSnapshot: dimension must be >= 2");
  }
  if (n_anchor_ < 0 || n_anchor_ > positions_.cols()) {
    throw std::invalid_argument("NetworkSnapshot: anchor count out of range");
  }
  if (!positions_.allFinite()) {
    throw std::invalid_argument("NetworkSnapshot: positions must be finite");
  }
}

NetworkSnapshot NetworkSnapshot::from_points(const std::vector<Eigen::Vector2d>& points,
                                             int n_anchor) {
  Eigen::MatrixXd m(2, static_cast<Eigen::Index>(points.size()));
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    m.col(k) = points[static_cast<std::size_t>(k)];
  }
  return NetworkSnapshot(std::move(m), n_anchor);
}

int MeasurementGraph::neighbor_count(int robot) const {
  if (robot < 0 || robot >= n_robots) {
    throw std::out_of_range("MeasurementGraph: robot index out of range");
  }
  return static_cast<int>(adjacency[static_cast<std::size_t>(robot)].size());
}

int MeasurementGraph::informative_neighbor_count(int robot) const {
  if (robot < 0 || robot >= n_robots) {
    throw std::out_of_range("MeasurementGraph: robot index out of range");
  }
  int count = 0;
  for (const MeasurementEdge& e : edges) {
    if (e.kind == EdgeKind::kAnchorAnchor) continue;
    if (e.i == robot || e.j == robot) ++count;
  }
  return count;
}

MeasurementGraph build_measurement_graph(const NetworkSnapshot& snapshot,
                                         const MeasurementModel& model) {
  model.validate();
  const int n = snapshot.size();
  const int na = snapshot.anchor_count();
  MeasurementGraph graph;
  graph.n_robots = n;
  graph.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = (snapshot.positions().col(i) - snapshot.positions().col(j)).norm();
      if (dist == 0.0) {
        throw DegenerateGeometryError("coincident robots " + std::to_string(i) + " and " +
                                      std::to_string(j));
      }
      if (dist > model.sensing_radius) continue;
      MeasurementEdge edge;
      edge.length = dist;
      if (i < na && j < na) {
        edge.kind = EdgeKind::kAnchorAnchor;
        edge.i = i;
        edge.j = j;
      } else if (i >= na && j >= na) {
        edge.kind = EdgeKind::kNonNon;
        edge.i = i;
        edge.j = j;
      } else {
        edge.kind = EdgeKind::kNonAnchor;
        edge.i = std::max(i, j);  // non-anchor first
        edge.j = std::min(i, j);
      }
      graph.edges.push_back(edge);
      graph.adjacency[static_cast<std::size_t>(i)].push_back(j);
      graph.adjacency[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  for (auto& neighbors : graph.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return graph;
}

RangeObservationSet simulate_ranges(const NetworkSnapshot& snapshot,
                                    const MeasurementModel& model, std::uint64_t seed) {
  const MeasurementGraph graph = build_measurement_graph(snapshot, model);
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> noise(0.0, model.sigma);
  RangeObservationSet out;
  out.seed = seed;
  for (const MeasurementEdge& e : graph.edges) {
    if (e.kind == EdgeKind::kAnchorAnchor) continue;
    double measured = 0.0;
    if (model.gamma == 1) {
      do {
        measured = e.length + noise(engine);
      } while (measured <= 0.0);
    } else {
      measured = e.length * std::exp(noise(engine));
    }
    out.observations.push_back({e.i, e.j, measured});
  }
  return out;
}

}  // namespace lcgp
