#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "lcgp/fim.hpp"
#include "lcgp/network.hpp"
#include "lcgp/roadmap.hpp"

namespace lcgp {

/// Node trajectories of the robots planned so far, in planning order (anchors
/// first). A robot that has reached the end of its trajectory parks at its
/// final node and keeps contributing measurements.
struct PlannedTraces {
  std::vector<int> robot_ids;                // global robot indices
  std::vector<std::vector<int>> node_paths;  // one non-empty path per robot

  int count() const { return static_cast<int>(robot_ids.size()); }

  int node_at(int k, int t) const {
    const auto& path = node_paths[static_cast<std::size_t>(k)];
    return t < static_cast<int>(path.size()) ? path[static_cast<std::size_t>(t)] : path.back();
  }

  // Time from which every planned robot is parked.
  int all_parked_time() const {
    int latest = 0;
    for (const auto& path : node_paths) {
      latest = std::max(latest, static_cast<int>(path.size()) - 1);
    }
    return latest;
  }
};

enum class CsetFailureReason { kEmpty, kSteadyState, kHorizonCap };

std::string to_string(CsetFailureReason reason);

/// Per-timestep node sets for one robot: reachable[t] grows by one graph hop
/// per step from valid[t-1]; valid[t] filters reachable[t] through the
/// connected predicate and the localizability indicator (non-anchors) or
/// equals it (anchors). Sets are kept through `horizon`, which extends past
/// the first goal containment by the configured slack so the search can trade
/// extra timesteps for shorter travel.
struct ConstraintSets {
  int robot = 0;  // global index
  int start_node = 0;
  int goal_node = 0;
  int first_goal_time = 0;
  int horizon = 0;
  std::vector<std::vector<int>> reachable;  // sorted node ids per t
  std::vector<std::vector<int>> valid;      // sorted node ids per t

  bool valid_contains(int t, int node) const;
};

struct CsetOutcome {
  std::optional<ConstraintSets> sets;
  CsetFailureReason failure = CsetFailureReason::kEmpty;
  int failed_at = -1;

  bool ok() const { return sets.has_value(); }
};

struct CsetConfig {
  int n_anchor = 0;
  LocalizabilityConstraints constraints;
  int max_horizon = 1000;
  int horizon_slack = 12;
};

/// prev_valid together with all roadmap neighbors of its members; waiting in
/// place is always allowed. Input and output are sorted node-id sets.
std::vector<int> reachable_step(const std::vector<int>& prev_valid, const Roadmap& roadmap);

/// True iff the candidate lies within the sensing horizon of at least one
/// already-planned robot position.
bool connected_predicate(const Eigen::Vector2d& candidate,
                         const std::vector<Eigen::Vector2d>& planned_at_t, double rho);

/// Runs the valid-set recursion for one robot until the goal node enters the
/// valid set (success), the set empties, the set reaches a steady state after
/// all planned robots have parked without containing the goal, or the horizon
/// cap is hit. Only candidates passing the connected predicate are handed to
/// the localizability indicator.
CsetOutcome construct_valid_sets(int robot, int start_node, int goal_node,
                                 const PlannedTraces& traces, const Roadmap& roadmap,
                                 const MeasurementModel& model, const CsetConfig& config);

}  // namespace lcgp
