#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "lcgp/environment.hpp"

namespace lcgp {

struct RoadmapEdge {
  int u = 0;
  int v = 0;
  double length = 0.0;
};

/// Shared planning graph: collision-free Halton samples plus injected
/// start/goal nodes, with an edge between every pair of nodes within the
/// connection radius whose straight segment clears all obstacles.
struct Roadmap {
  std::vector<Eigen::Vector2d> nodes;
  std::vector<RoadmapEdge> edges;
  std::vector<std::vector<std::pair<int, double>>> adjacency;  // (neighbor, length), sorted
  std::vector<int> extra_node_ids;  // indices of the injected nodes, input order
  double connection_radius = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }
};

Roadmap build_roadmap(const Environment& env, int n_samples, double connection_radius,
                      const std::vector<Eigen::Vector2d>& extra_nodes,
                      std::pair<int, int> halton_bases = {2, 3}, int halton_skip = 0);

/// Hop count of the longest shortest path, estimated by a double BFS sweep.
int estimate_graph_diameter(const Roadmap& roadmap, int from_node);

}  // namespace lcgp
