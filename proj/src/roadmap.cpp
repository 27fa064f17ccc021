#include "lcgp/roadmap.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "lcgp/halton.hpp"
#include "lcgp/network.hpp"

namespace lcgp {

namespace {

std::vector<int> bfs_depths(const Roadmap& roadmap, int source) {
  std::vector<int> depth(static_cast<std::size_t>(roadmap.size()), -1);
  std::queue<int> frontier;
  depth[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const auto& [u, len] : roadmap.adjacency[static_cast<std::size_t>(v)]) {
      (void)len;
      if (depth[static_cast<std::size_t>(u)] < 0) {
        depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
        frontier.push(u);
      }
    }
  }
  return depth;
}

}  // namespace

Roadmap build_roadmap(const Environment& env, int n_samples, double connection_radius,
                      const std::vector<Eigen::Vector2d>& extra_nodes,
                      std::pair<int, int> halton_bases, int halton_skip) {
  if (!(connection_radius > 0.0)) {
    throw std::invalid_argument("build_roadmap: connection_radius must be positive");
  }
  Roadmap roadmap;
  roadmap.connection_radius = connection_radius;

  for (const Eigen::Vector2d& unit : halton_points(n_samples, halton_bases, halton_skip)) {
    const Eigen::Vector2d p(env.bounds.xmin + unit.x() * env.bounds.width(),
                            env.bounds.ymin + unit.y() * env.bounds.height());
    if (!collision_free_point(env, p)) continue;
    bool near_extra = false;
    for (const Eigen::Vector2d& e : extra_nodes) {
      if ((e - p).norm() < 1e-9) {
        near_extra = true;
        break;
      }
    }
    if (!near_extra) roadmap.nodes.push_back(p);
  }

  for (std::size_t k = 0; k < extra_nodes.size(); ++k) {
    if (!env.bounds.contains(extra_nodes[k]) || !collision_free_point(env, extra_nodes[k])) {
      throw ScenarioError("start/goal position " + std::to_string(k) +
                          " is outside bounds or inside an obstacle");
    }
    roadmap.extra_node_ids.push_back(roadmap.size());
    roadmap.nodes.push_back(extra_nodes[k]);
  }

  const int n = roadmap.size();
  roadmap.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double length = (roadmap.nodes[static_cast<std::size_t>(i)] -
                             roadmap.nodes[static_cast<std::size_t>(j)])
                                .norm();
      if (length > connection_radius || length == 0.0) continue;
      if (!collision_free_segment(env, roadmap.nodes[static_cast<std::size_t>(i)],
                                  roadmap.nodes[static_cast<std::size_t>(j)])) {
        continue;
      }
      roadmap.edges.push_back({i, j, length});
      roadmap.adjacency[static_cast<std::size_t>(i)].push_back({j, length});
      roadmap.adjacency[static_cast<std::size_t>(j)].push_back({i, length});
    }
  }
  for (auto& neighbors : roadmap.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return roadmap;
}

int estimate_graph_diameter(const Roadmap& roadmap, int from_node) {
  if (roadmap.size() == 0) return 0;
  std::vector<int> depth = bfs_depths(roadmap, from_node);
  int farthest = from_node;
  for (int v = 0; v < roadmap.size(); ++v) {
    if (depth[static_cast<std::size_t>(v)] > depth[static_cast<std::size_t>(farthest)]) {
      farthest = v;
    }
  }
  depth = bfs_depths(roadmap, farthest);
  int diameter = 0;
  for (int v = 0; v < roadmap.size(); ++v) {
    diameter = std::max(diameter, depth[static_cast<std::size_t>(v)]);
  }
  return diameter;
}

}  // namespace lcgp
