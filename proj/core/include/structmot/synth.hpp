#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "structmot/geometry.hpp"
#include "structmot/io.hpp"

namespace structmot {

enum class TargetMotion { kConstantVelocity, kSinusoid };

// Synthetic multi-target scenario. Targets move in world coordinates inside a
// reflecting region; a camera offset (random walk plus periodic jump
// impulses) is subtracted from every position to form image coordinates, so
// camera motion translates ground truth and detections rigidly and leaves
// relative target geometry untouched.
struct ScenarioConfig {
  int target_count = 10;
  int frame_count = 100;
  int image_width = 640;
  int image_height = 480;

  TargetMotion motion = TargetMotion::kConstantVelocity;
  double speed_min = 0.5;   // px/frame
  double speed_max = 2.0;
  double amp_min = 5.0;     // sinusoid amplitude, px
  double amp_max = 20.0;
  double period_min = 20.0; // sinusoid period, frames
  double period_max = 60.0;

  double camera_walk_sigma = 0.0;  // px/frame, per axis
  double camera_jump = 0.0;        // px, impulse magnitude
  int camera_jump_period = 0;      // frames between impulses, 0 = never

  double jitter = 0.0;             // detection center noise, px per axis
  double fp_rate = 0.0;            // expected false boxes per frame
  double fn_rate = 0.0;            // drop probability per true box

  bool identical_appearance = true;  // accepted for completeness; no frames
                                     // are rendered, so synthetic runs are
                                     // motion-only either way
  std::uint64_t seed = 1;

  double box_width_min = 20.0;
  double box_width_max = 30.0;
  double box_height_min = 40.0;
  double box_height_max = 60.0;
  double spawn_margin = 0.15;  // fraction of image kept clear at each border
};

struct ScenarioOutput {
  std::map<int, std::vector<GtEntry>> gt_frames;
  std::map<int, std::vector<Detection>> det_frames;
  std::vector<Point2> camera;  // offset per frame, index 0 = frame 1
};

// Deterministic for a fixed config: every noise source draws from its own
// seed-derived stream (motion, camera, jitter, drops, false positives), in
// (frame, target) order.
ScenarioOutput generate(const ScenarioConfig& cfg);

ScenarioConfig load_scenario_config(const std::filesystem::path& path);
ScenarioConfig scenario_from_kv(const std::map<std::string, std::string>& kv);

void write_gt_file(const std::map<int, std::vector<GtEntry>>& gt,
                   const std::filesystem::path& path);
void write_det_file(const std::map<int, std::vector<Detection>>& det,
                    const std::filesystem::path& path);
void write_camera_file(const std::vector<Point2>& camera, const std::filesystem::path& path);

}  // namespace structmot
