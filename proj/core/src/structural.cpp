#include "structmot/structural.hpp"

#include <algorithm>
#include <limits>

#include "structmot/errors.hpp"
#include "structmot/hungarian.hpp"

namespace structmot {

DisplacementFrame relative_displacements(std::span<const Point2> points) {
  DisplacementFrame out;
  if (points.empty()) return out;
  Point2 sum;
  for (const auto& p : points) sum += p;
  out.centroid = sum * (1.0 / static_cast<double>(points.size()));
  out.displacements.reserve(points.size());
  for (const auto& p : points) out.displacements.push_back(p - out.centroid);
  return out;
}

double structural_cost(std::span<const Point2> detections,
                       std::span<const Point2> trajectories,
                       std::span<const PairId> pairing) {
  if (pairing.empty()) return 0.0;
  Point2 det_sum, traj_sum;
  for (const auto& pr : pairing) {
    det_sum += detections[pr.detection];
    traj_sum += trajectories[pr.trajectory];
  }
  const double inv_n = 1.0 / static_cast<double>(pairing.size());
  const Point2 det_mean = det_sum * inv_n;
  const Point2 traj_mean = traj_sum * inv_n;
  double cost = 0.0;
  for (const auto& pr : pairing) {
    const Point2 dd = detections[pr.detection] - det_mean;
    const Point2 dt = trajectories[pr.trajectory] - traj_mean;
    cost += squared_norm(dd - dt);
  }
  return cost;
}

Point2 predict_candidate_location(const MatchSet& match_set,
                                  std::span<const Point2> detections,
                                  std::span<const Point2> trajectories,
                                  int trajectory_index) {
  Point2 offset_sum;
  for (const auto& pr : match_set.pairs)
    offset_sum += detections[pr.detection] - trajectories[pr.trajectory];
  const double inv_n = 1.0 / static_cast<double>(match_set.pairs.size());
  return trajectories[trajectory_index] + offset_sum * inv_n;
}

MatchSet heuristic_search(const PairId& seed,
                          std::span<const Point2> detections,
                          std::span<const Point2> trajectories,
                          const StructuralConfig& cfg) {
  MatchSet theta;
  theta.seed = seed;
  theta.pairs.push_back(seed);

  const std::size_t n_traj = trajectories.size();
  const std::size_t cap = cfg.max_set_size > 0 ? cfg.max_set_size : n_traj;

  std::vector<char> det_used(detections.size(), 0), traj_used(n_traj, 0);
  det_used[seed.detection] = 1;
  traj_used[seed.trajectory] = 1;

  std::vector<PairId> trial;
  while (theta.pairs.size() < cap) {
    // Candidate pairs: one per free trajectory, snapped to its nearest free
    // detection.
    PairId best_pair{-1, -1};
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_traj; ++j) {
      if (traj_used[j]) continue;
      const Point2 predicted =
          predict_candidate_location(theta, detections, trajectories, static_cast<int>(j));
      int nearest = -1;
      double nearest_d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < detections.size(); ++i) {
        if (det_used[i]) continue;
        const double d = euclidean_distance(predicted, detections[i]);
        if (d < nearest_d) {
          nearest_d = d;
          nearest = static_cast<int>(i);
        }
      }
      if (nearest < 0) continue;
      const PairId candidate{nearest, static_cast<int>(j)};
      trial = theta.pairs;
      trial.push_back(candidate);
      const double cost = structural_cost(detections, trajectories, trial);
      if (cost < best_cost || (cost == best_cost && candidate < best_pair)) {
        best_cost = cost;
        best_pair = candidate;
      }
    }
    if (best_pair.detection < 0) break;  // no free detections or trajectories

    const double threshold = cfg.phi_s * static_cast<double>(theta.pairs.size() + 1);
    if (!(best_cost < threshold)) break;

    theta.pairs.push_back(best_pair);
    theta.admission_costs.push_back(best_cost);
    det_used[best_pair.detection] = 1;
    traj_used[best_pair.trajectory] = 1;
  }
  return theta;
}

FixedPairAssignment fixed_pair_global_assignment(std::span<const Point2> detections,
                                                 std::span<const Point2> trajectories,
                                                 const PairId& fixed) {
  const std::size_t m = detections.size();
  if (m != trajectories.size())
    throw DataError(
        "fixed_pair_global_assignment requires equal detection/trajectory counts; "
        "use heuristic_search for unequal frames");

  const DisplacementFrame dd = relative_displacements(detections);
  const DisplacementFrame dt = relative_displacements(trajectories);

  FixedPairAssignment out;
  out.pairs.push_back(fixed);
  if (m > 1) {
    // Hungarian over the remaining indices on ||Δd_i − ΔT_j||².
    std::vector<int> det_ids, traj_ids;
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<int>(i) != fixed.detection) det_ids.push_back(static_cast<int>(i));
      if (static_cast<int>(i) != fixed.trajectory) traj_ids.push_back(static_cast<int>(i));
    }
    Matrix cost(m - 1, m - 1);
    for (std::size_t r = 0; r < det_ids.size(); ++r)
      for (std::size_t c = 0; c < traj_ids.size(); ++c)
        cost.at(r, c) =
            squared_norm(dd.displacements[det_ids[r]] - dt.displacements[traj_ids[c]]);
    const std::vector<int> row_to_col = solve_square_assignment(cost);
    for (std::size_t r = 0; r < det_ids.size(); ++r)
      out.pairs.push_back({det_ids[r], traj_ids[row_to_col[r]]});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  for (const auto& pr : out.pairs)
    out.cost += squared_norm(dd.displacements[pr.detection] - dt.displacements[pr.trajectory]);
  return out;
}

Matrix modify_cost_matrix(const Matrix& raw,
                          const std::vector<std::vector<std::optional<MatchSet>>>& match_sets) {
  std::size_t n_max = 0;
  for (const auto& row : match_sets)
    for (const auto& ms : row)
      if (ms) n_max = std::max(n_max, ms->size());
  Matrix out = raw;
  if (n_max == 0) return out;
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      const auto& ms = match_sets[i][j];
      if (!ms) continue;
      double sum = 0.0;
      for (const auto& pr : ms->pairs) sum += raw.at(pr.detection, pr.trajectory);
      const double n = static_cast<double>(ms->size());
      out.at(i, j) = static_cast<double>(n_max) / (n * n) * sum;
    }
  }
  return out;
}

}  // namespace structmot
