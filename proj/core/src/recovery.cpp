#include "structmot/recovery.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace structmot {

std::vector<Point2> predict_missing_targets(std::span<const MatchedTarget> matched,
                                            std::span<const MissingTarget> missing) {
  const int r = static_cast<int>(missing.size());
  if (r == 0) return {};

  const int s = static_cast<int>(matched.size());
  const double n = static_cast<double>(s + r);

  // Per axis, with w_j = T̂_j − T_j^{t−1} and u_i = T_i^t − T_i^{t−1}, the
  // stationarity conditions reduce to 2 w_l − mean(u, w) − m_l = 0 where
  // m_j = T̃_j − T_j^{t−1}. The matrix (2 − 1/n on the diagonal, −1/n off) is
  // strictly diagonally dominant.
  Eigen::MatrixXd a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = (i == j ? 2.0 : 0.0) - 1.0 / n;

  double ux = 0.0, uy = 0.0;
  for (const auto& t : matched) {
    ux += t.current_position.x - t.previous_position.x;
    uy += t.current_position.y - t.previous_position.y;
  }
  Eigen::VectorXd bx(r), by(r);
  for (int j = 0; j < r; ++j) {
    bx(j) = (missing[j].motion_prediction.x - missing[j].previous_position.x) + ux / n;
    by(j) = (missing[j].motion_prediction.y - missing[j].previous_position.y) + uy / n;
  }

  const Eigen::LDLT<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd wx = solver.solve(bx);
  const Eigen::VectorXd wy = solver.solve(by);

  std::vector<Point2> out(r);
  for (int j = 0; j < r; ++j)
    out[j] = {missing[j].previous_position.x + wx(j), missing[j].previous_position.y + wy(j)};
  return out;
}

double recovery_objective(std::span<const MatchedTarget> matched,
                          std::span<const MissingTarget> missing,
                          std::span<const Point2> candidate) {
  const std::size_t n = matched.size() + missing.size();
  if (n == 0) return 0.0;

  Point2 mean_t, mean_prev;
  for (const auto& t : matched) {
    mean_t += t.current_position;
    mean_prev += t.previous_position;
  }
  for (std::size_t j = 0; j < missing.size(); ++j) {
    mean_t += candidate[j];
    mean_prev += missing[j].previous_position;
  }
  const double inv = 1.0 / static_cast<double>(n);
  mean_t = mean_t * inv;
  mean_prev = mean_prev * inv;

  double obj = 0.0;
  for (const auto& t : matched)
    obj += squared_norm((t.current_position - mean_t) - (t.previous_position - mean_prev));
  for (std::size_t j = 0; j < missing.size(); ++j) {
    obj += squared_norm((candidate[j] - mean_t) - (missing[j].previous_position - mean_prev));
    obj += squared_norm(candidate[j] - missing[j].motion_prediction);
  }
  return obj;
}

LifecycleResult step_lifecycle(std::vector<Trajectory>& trajectories,
                               const AssignmentResult& assignment,
                               std::span<const Detection> detections,
                               std::span<const Point2> missing_predictions,
                               int frame,
                               std::int64_t& next_track_id,
                               const RecoveryConfig& cfg) {
  LifecycleResult out;

  for (const auto& [det_idx, traj_idx] : assignment.matches) {
    Trajectory& traj = trajectories[traj_idx];
    const Detection& det = detections[det_idx];
    traj.states.push_back(
        {traj.track_id, det.center(), det.bbox, frame, /*matched=*/true});
    traj.miss_count = 0;
    traj.hits += 1;
    traj.last_confidence = det.confidence;
  }

  for (std::size_t k = 0; k < assignment.unmatched_cols.size(); ++k) {
    Trajectory& traj = trajectories[assignment.unmatched_cols[k]];
    const Point2 predicted =
        k < missing_predictions.size() ? missing_predictions[k] : traj.last_center();
    traj.states.push_back({traj.track_id, predicted,
                           bbox_centered_at(traj.back().bbox, predicted), frame,
                           /*matched=*/false});
    traj.miss_count += 1;
  }

  const int window = cfg.enabled ? cfg.window : 0;
  std::erase_if(trajectories, [&](const Trajectory& t) {
    if (t.miss_count > window) {
      out.terminated_track_ids.push_back(t.track_id);
      return true;
    }
    return false;
  });

  for (const int det_idx : assignment.unmatched_rows) {
    const Detection& det = detections[det_idx];
    Trajectory traj;
    traj.track_id = next_track_id++;
    traj.states.push_back({traj.track_id, det.center(), det.bbox, frame, /*matched=*/true});
    traj.hits = 1;
    traj.last_confidence = det.confidence;
    out.new_track_ids.push_back(traj.track_id);
    trajectories.push_back(std::move(traj));
  }
  return out;
}

}  // namespace structmot
