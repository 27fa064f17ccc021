#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <cstdint>
#include <limits>

#include "lcgp/network.hpp"

namespace lcgp {

/// Lower bounds on the A- and E-optimality of the network information matrix.
/// alpha = -inf together with beta = 0 is the trivial constraint, satisfied by
/// every configuration (the FIM is positive semidefinite).
struct LocalizabilityConstraints {
  double alpha = -std::numeric_limits<double>::infinity();
  double beta = 0.0;

  bool nontrivial() const {
    return alpha > -std::numeric_limits<double>::infinity() || beta > 0.0;
  }
};

/// Fisher information matrix of the non-anchor positions: a
/// (dim * n_nonanchor) square symmetric positive-semidefinite matrix built
/// from one rank-1 update per informative measurement edge.
struct Fim {
  int dim = 0;
  int n_nonanchor = 0;
  Eigen::MatrixXd matrix;
};

struct OptimalityReport {
  double a_opt = 0.0;       // -trace(F^-1), or -inf when singular
  double e_opt = 0.0;       // max(lambda_min, 0), or 0 when singular
  double lambda_min = 0.0;  // raw smallest eigenvalue
  bool singular = false;
};

enum class PairVectorKind { kDifference, kSingle };

/// Block-structured information vector for the edge (i, j): the d-block of
/// non-anchor robot i holds (x_i - x_j) / (sigma * L^gamma); with
/// kDifference (both robots non-anchor) robot j's block holds its negative.
Eigen::VectorXd pair_vector(const NetworkSnapshot& snapshot, const MeasurementModel& model,
                            int i, int j, PairVectorKind kind);

/// Sum of rank-1 outer products: difference vectors for non-anchor/non-anchor
/// edges, single-block vectors for non-anchor/anchor edges. Anchor-anchor
/// edges carry no information and contribute nothing.
Fim assemble_fim(const NetworkSnapshot& snapshot, const MeasurementModel& model,
                 const MeasurementGraph& graph);

/// Full real spectrum, ascending.
Eigen::VectorXd spectrum(const Fim& fim);

/// Singularity threshold: lambda_min <= 1e-10 * max(1, lambda_max).
OptimalityReport optimality_report(const Fim& fim);

double a_optimality(const Fim& fim);
double e_optimality(const Fim& fim);

/// Necessary condition for any nontrivial constraint: false when some
/// non-anchor has fewer than dim informative neighbors (the FIM is then
/// certainly singular); true otherwise (the FIM may still be singular).
bool connectivity_prescreen(const MeasurementGraph& graph, const NetworkSnapshot& snapshot);

namespace instrument {
// Call counters used to verify that candidate filtering never evaluates the
// indicator on candidates outside the connected set.
extern std::atomic<std::uint64_t> lc_indicator_calls;
extern std::atomic<std::uint64_t> lc_indicator_disconnected_calls;
void reset_lc_counters();
}  // namespace instrument

/// Localizability-constraint indicator: forms the hypothetical network
/// {planned robots} + {candidate appended as the last non-anchor}, builds its
/// measurement graph and FIM, and returns (a_opt >= alpha) && (e_opt >= beta).
///
/// A candidate coincident with a planned robot (or any degenerate geometry in
/// the hypothetical network) evaluates to false. Trivial constraints are
/// satisfied by every configuration and return true without building the FIM.
/// For nontrivial constraints the connectivity prescreen short-circuits to
/// false.
///
/// planned_positions: dim x k matrix, previously planned robots with anchors
/// grouped first; n_anchor of them are anchors (n_anchor <= k).
bool lc_indicator(const Eigen::VectorXd& candidate, const Eigen::MatrixXd& planned_positions,
                  int n_anchor, const MeasurementModel& model,
                  const LocalizabilityConstraints& constraints);

}  // namespace lcgp
