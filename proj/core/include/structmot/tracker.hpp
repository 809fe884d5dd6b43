#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "structmot/assign.hpp"
#include "structmot/costs.hpp"
#include "structmot/geometry.hpp"
#include "structmot/io.hpp"
#include "structmot/motion.hpp"
#include "structmot/recovery.hpp"
#include "structmot/structural.hpp"

namespace structmot {

struct TrackerConfig {
  CostWeights weights;
  MotionConfig motion;
  StructuralConfig structural;
  GateConfig gate;
  RecoveryConfig recovery;
  bool structural_enabled = true;
  bool appearance_enabled = true;
  double confidence_threshold = -std::numeric_limits<double>::infinity();

  // Known image size (pixels); 0 = unknown.
  int image_width = 0;
  int image_height = 0;

  // Fills size-derived defaults: motion_scale = diagonal/10 and
  // phi_s = 0.005 * diagonal^2 when left at zero.
  TrackerConfig resolved() const;
};

struct StageTimings {
  double costs_ms = 0.0;
  double structural_ms = 0.0;
  double assignment_ms = 0.0;
  double recovery_ms = 0.0;
  double total_ms = 0.0;
};

// Online frame-by-frame tracker. Frames must be processed in increasing,
// gap-free order; output for a frame depends only on frames up to it.
class Tracker {
 public:
  explicit Tracker(const TrackerConfig& cfg);

  // Consumes one frame's detections (same frame index on all of them) and
  // returns the records emitted for that frame, sorted by track id.
  std::vector<ResultRecord> process_frame(int frame, const std::vector<Detection>& detections,
                                          const FrameImage* image = nullptr);

  const std::vector<Trajectory>& trajectories() const { return tracks_; }
  const StageTimings& timings() const { return timings_; }
  int current_frame() const { return current_frame_; }

 private:
  TrackerConfig cfg_;
  std::vector<Trajectory> tracks_;
  std::int64_t next_track_id_ = 1;
  int current_frame_ = 0;
  StageTimings timings_;
};

struct RunResult {
  std::vector<ResultRecord> records;
  StageTimings timings;
  int frames = 0;
  std::vector<std::string> warnings;
};

// Runs the tracker over every frame of a detection file (1..max frame,
// empty frames included). Deterministic for fixed inputs and config.
RunResult run_sequence(const SequenceSource& source, const TrackerConfig& cfg);

}  // namespace structmot
