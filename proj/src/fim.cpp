#include "lcgp/fim.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

namespace lcgp {

namespace {

constexpr double kSingularRelTol = 1e-10;

// Weighted edge direction Delta / (sigma * L^gamma).
Eigen::VectorXd edge_weight_vector(const NetworkSnapshot& snapshot,
                                   const MeasurementModel& model, int i, int j) {
  const Eigen::VectorXd delta = snapshot.position(i) - snapshot.position(j);
  const double length = delta.norm();
  if (length == 0.0) {
    throw DegenerateGeometryError("coincident robots " + std::to_string(i) + " and " +
                                  std::to_string(j));
  }
  const double denom = model.gamma == 1 ? length : length * length;
  return delta / (model.sigma * denom);
}

}  // namespace

Eigen::VectorXd pair_vector(const NetworkSnapshot& snapshot, const MeasurementModel& model,
                            int i, int j, PairVectorKind kind) {
  if (snapshot.is_anchor(i)) {
    throw std::invalid_argument("pair_vector: robot i must be a non-anchor");
  }
  if (kind == PairVectorKind::kDifference && snapshot.is_anchor(j)) {
    throw std::invalid_argument("pair_vector: difference kind requires non-anchor j");
  }
  const int d = snapshot.dim();
  const int na = snapshot.anchor_count();
  const Eigen::VectorXd u = edge_weight_vector(snapshot, model, i, j);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d) * snapshot.nonanchor_count());
  v.segment(static_cast<Eigen::Index>(d) * (i - na), d) = u;
  if (kind == PairVectorKind::kDifference) {
    v.segment(static_cast<Eigen::Index>(d) * (j - na), d) = -u;
  }
  return v;
}

Fim assemble_fim(const NetworkSnapshot& snapshot, const MeasurementModel& model,
                 const MeasurementGraph& graph) {
  const int d = snapshot.dim();
  const int na = snapshot.anchor_count();
  const int n_non = snapshot.nonanchor_count();
  if (n_non < 1) {
    throw std::invalid_argument("assemble_fim: network has no non-anchor robots");
  }
  Fim fim;
  fim.dim = d;
  fim.n_nonanchor = n_non;
  fim.matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d) * n_non,
                                     static_cast<Eigen::Index>(d) * n_non);
  for (const MeasurementEdge& e : graph.edges) {
    if (e.kind == EdgeKind::kAnchorAnchor) continue;
    const Eigen::VectorXd u = edge_weight_vector(snapshot, model, e.i, e.j);
    const Eigen::MatrixXd outer = u * u.transpose();
    const Eigen::Index bi = static_cast<Eigen::Index>(d) * (e.i - na);
    if (e.kind == EdgeKind::kNonAnchor) {
      fim.matrix.block(bi, bi, d, d) += outer;
    } else {
      const Eigen::Index bj = static_cast<Eigen::Index>(d) * (e.j - na);
      fim.matrix.block(bi, bi, d, d) += outer;
      fim.matrix.block(bj, bj, d, d) += outer;
      fim.matrix.block(bi, bj, d, d) -= outer;
      fim.matrix.block(bj, bi, d, d) -= outer;
    }
  }
  return fim;
}

Eigen::VectorXd spectrum(const Fim& fim) {
  if (!fim.matrix.allFinite()) {
    throw std::invalid_argument("spectrum: non-finite matrix entries");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(fim.matrix,
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues();  // ascending
}

OptimalityReport optimality_report(const Fim& fim) {
  const Eigen::VectorXd values = spectrum(fim);
  OptimalityReport report;
  report.lambda_min = values(0);
  const double lambda_max = values(values.size() - 1);
  report.singular = report.lambda_min <= kSingularRelTol * std::max(1.0, lambda_max);
  if (report.singular) {
    report.a_opt = -std::numeric_limits<double>::infinity();
    report.e_opt = 0.0;
  } else {
    report.a_opt = -(values.array().inverse().sum());
    report.e_opt = std::max(report.lambda_min, 0.0);
  }
  return report;
}

double a_optimality(const Fim& fim) { return optimality_report(fim).a_opt; }

double e_optimality(const Fim& fim) { return optimality_report(fim).e_opt; }

bool connectivity_prescreen(const MeasurementGraph& graph, const NetworkSnapshot& snapshot) {
  for (int robot = snapshot.anchor_count(); robot < snapshot.size(); ++robot) {
    // Edges incident to a non-anchor are NA or NN, so the plain neighbor
    // count is already the informative count.
    if (graph.neighbor_count(robot) < snapshot.dim()) return false;
  }
  return true;
}

namespace instrument {
std::atomic<std::uint64_t> lc_indicator_calls{0};
std::atomic<std::uint64_t> lc_indicator_disconnected_calls{0};
void reset_lc_counters() {
  lc_indicator_calls.store(0);
  lc_indicator_disconnected_calls.store(0);
}
}  // namespace instrument

bool lc_indicator(const Eigen::VectorXd& candidate, const Eigen::MatrixXd& planned_positions,
                  int n_anchor, const MeasurementModel& model,
                  const LocalizabilityConstraints& constraints) {
  const Eigen::Index k = planned_positions.cols();
  if (k < n_anchor) {
    throw std::invalid_argument("lc_indicator: anchors must all be planned first");
  }
  instrument::lc_indicator_calls.fetch_add(1, std::memory_order_relaxed);
  double min_dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < k; ++c) {
    min_dist = std::min(min_dist, (planned_positions.col(c) - candidate).norm());
  }
  if (min_dist > model.sensing_radius) {
    instrument::lc_indicator_disconnected_calls.fetch_add(1, std::memory_order_relaxed);
  }
  if (min_dist == 0.0) return false;  // coincident candidate
  if (!constraints.nontrivial()) return true;

  Eigen::MatrixXd positions(planned_positions.rows(), k + 1);
  positions.leftCols(k) = planned_positions;
  positions.col(k) = candidate;
  try {
    const NetworkSnapshot snapshot(std::move(positions), n_anchor);
    const MeasurementGraph graph = build_measurement_graph(snapshot, model);
    if (!connectivity_prescreen(graph, snapshot)) return false;
    const OptimalityReport report = optimality_report(assemble_fim(snapshot, model, graph));
    return report.a_opt >= constraints.alpha && report.e_opt >= constraints.beta;
  } catch (const DegenerateGeometryError&) {
    return false;
  }
}

}  // namespace lcgp
