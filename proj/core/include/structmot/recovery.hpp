#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "structmot/assign.hpp"
#include "structmot/geometry.hpp"

namespace structmot {

// A trajectory with no associated detection this frame: its motion-only
// prediction and its position in the previous frame.
struct MissingTarget {
  std::int64_t track_id = 0;
  Point2 motion_prediction;   // from the AR model
  Point2 previous_position;   // last state, frame t-1
  int age = 1;                // consecutive unmatched frames including this one
};

// A trajectory matched this frame: observed position now and position at t-1.
struct MatchedTarget {
  Point2 current_position;
  Point2 previous_position;
};

struct RecoveryConfig {
  bool enabled = true;
  int window = 10;            // frames a target may stay missing
  double solver_tolerance = 1e-8;

  // Output policy for predicted (unobserved) states: they are emitted
  // streaming, only for tracks with at least min_output_hits matched states
  // and at most max_output_misses consecutive misses.
  int min_output_hits = 2;
  int max_output_misses = 3;
};

// Joint structure+motion prediction for every missing target: minimizes
//   Σ_{i in matched ∪ missing} ||ΔT_i^t − ΔT_i^{t−1}||² + Σ_j ||T̂_j − T̃_j||²
// with frame-t and frame-(t−1) displacements taken about the mean of the
// matched-plus-missing identity set. The quadratic is strictly convex, solved
// by its normal equations; with no matched targets and one missing target the
// answer is the motion-only prediction itself.
std::vector<Point2> predict_missing_targets(std::span<const MatchedTarget> matched,
                                            std::span<const MissingTarget> missing);

// Objective of the minimization above, exposed for verification.
double recovery_objective(std::span<const MatchedTarget> matched,
                          std::span<const MissingTarget> missing,
                          std::span<const Point2> candidate);

struct LifecycleResult {
  std::vector<std::int64_t> new_track_ids;
  std::vector<std::int64_t> terminated_track_ids;
};

// Applies one frame's assignment to the trajectory set: matched trajectories
// append observed states, unmatched ones append predicted states (positions
// aligned with assignment.unmatched_cols) and age, trajectories older than the
// window are removed, and every unmatched detection starts a new track.
LifecycleResult step_lifecycle(std::vector<Trajectory>& trajectories,
                               const AssignmentResult& assignment,
                               std::span<const Detection> detections,
                               std::span<const Point2> missing_predictions,
                               int frame,
                               std::int64_t& next_track_id,
                               const RecoveryConfig& cfg);

}  // namespace structmot
