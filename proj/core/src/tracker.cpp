#include "structmot/tracker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "structmot/errors.hpp"

namespace structmot {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

TrackerConfig TrackerConfig::resolved() const {
  TrackerConfig out = *this;
  const double diag =
      image_width > 0 && image_height > 0
          ? std::hypot(static_cast<double>(image_width), static_cast<double>(image_height))
          : 0.0;
  if (out.weights.motion_scale <= 0.0)
    out.weights.motion_scale = diag > 0.0 ? diag / 10.0 : 100.0;
  if (out.structural.phi_s <= 0.0)
    out.structural.phi_s = diag > 0.0 ? 0.005 * diag * diag : 1000.0;
  return out;
}

Tracker::Tracker(const TrackerConfig& cfg) : cfg_(cfg.resolved()) {}

std::vector<ResultRecord> Tracker::process_frame(int frame,
                                                 const std::vector<Detection>& detections,
                                                 const FrameImage* image) {
  if (frame < 1) throw DataError("frame index must be >= 1");
  if (current_frame_ != 0 && frame != current_frame_ + 1)
    throw DataError("frames must be processed in order: expected " +
                    std::to_string(current_frame_ + 1) + ", got " + std::to_string(frame));
  const auto t_total = Clock::now();

  std::vector<Detection> dets;
  dets.reserve(detections.size());
  for (const auto& d : detections) {
    if (d.frame != frame) throw DataError("detection frame mismatch");
    if (d.confidence >= cfg_.confidence_threshold && d.bbox.valid()) dets.push_back(d);
  }

  // Motion predictions and appearance cues per active trajectory.
  const auto t_costs = Clock::now();
  std::vector<TrajectoryCue> cues(tracks_.size());
  std::vector<Point2> traj_centers(tracks_.size());
  for (std::size_t j = 0; j < tracks_.size(); ++j) {
    const ARMotionModel model = fit_ar_model(tracks_[j], cfg_.motion);
    cues[j].predicted = predict_next_location(model);
    cues[j].descriptor = tracks_[j].descriptor.empty() ? nullptr : &tracks_[j].descriptor;
    traj_centers[j] = tracks_[j].last_center();
  }

  std::vector<std::optional<AppearanceDescriptor>> det_descs;
  const bool use_appearance = cfg_.appearance_enabled && image != nullptr && image->valid();
  if (use_appearance) {
    det_descs.resize(dets.size());
    for (std::size_t i = 0; i < dets.size(); ++i)
      det_descs[i] = extract_descriptor(*image, dets[i].bbox);
  }

  Matrix costs = build_raw_cost_matrix(dets, cues, cfg_.weights, det_descs);
  timings_.costs_ms += ms_since(t_costs);

  // Structural sharpening: grow a match set around every gated pair and
  // rescale its cost by the set statistics.
  if (cfg_.structural_enabled && !costs.empty()) {
    const auto t_struct = Clock::now();
    std::vector<Point2> det_centers(dets.size());
    for (std::size_t i = 0; i < dets.size(); ++i) det_centers[i] = dets[i].center();
    std::vector<std::vector<std::optional<MatchSet>>> sets(
        costs.rows(), std::vector<std::optional<MatchSet>>(costs.cols()));
    for (std::size_t i = 0; i < costs.rows(); ++i) {
      for (std::size_t j = 0; j < costs.cols(); ++j) {
        if (costs.at(i, j) >= cfg_.gate.gate) continue;
        sets[i][j] = heuristic_search({static_cast<int>(i), static_cast<int>(j)}, det_centers,
                                      traj_centers, cfg_.structural);
      }
    }
    costs = modify_cost_matrix(costs, sets);
    timings_.structural_ms += ms_since(t_struct);
  }

  const auto t_assign = Clock::now();
  const AssignmentResult assignment = solve_gated_assignment(costs, cfg_.gate);
  timings_.assignment_ms += ms_since(t_assign);

  // Joint structure+motion prediction for the targets that went unmatched.
  const auto t_recovery = Clock::now();
  std::vector<Point2> missing_predictions;
  if (!assignment.unmatched_cols.empty()) {
    std::vector<MatchedTarget> matched;
    matched.reserve(assignment.matches.size());
    for (const auto& [di, tj] : assignment.matches)
      matched.push_back({dets[di].center(), tracks_[tj].last_center()});
    std::vector<MissingTarget> missing;
    missing.reserve(assignment.unmatched_cols.size());
    for (const int tj : assignment.unmatched_cols)
      missing.push_back({tracks_[tj].track_id, cues[tj].predicted, tracks_[tj].last_center(),
                         tracks_[tj].miss_count + 1});
    if (cfg_.recovery.enabled) {
      missing_predictions = predict_missing_targets(matched, missing);
    } else {
      missing_predictions.reserve(missing.size());
      for (const auto& m : missing) missing_predictions.push_back(m.motion_prediction);
    }
  }

  // Refresh appearance of matched tracks before lifecycle compacts the list.
  if (use_appearance) {
    for (const auto& [di, tj] : assignment.matches)
      if (det_descs[di]) tracks_[tj].descriptor = det_descs[di]->bins;
  }

  const LifecycleResult lifecycle = step_lifecycle(tracks_, assignment, dets,
                                                   missing_predictions, frame, next_track_id_,
                                                   cfg_.recovery);
  if (use_appearance) {
    // New tracks sit at the tail in unmatched-detection order.
    const std::size_t first_new = tracks_.size() - lifecycle.new_track_ids.size();
    for (std::size_t k = 0; k < lifecycle.new_track_ids.size(); ++k) {
      const int di = assignment.unmatched_rows[k];
      if (det_descs[di]) tracks_[first_new + k].descriptor = det_descs[di]->bins;
    }
  }
  timings_.recovery_ms += ms_since(t_recovery);

  std::vector<ResultRecord> records;
  for (const auto& traj : tracks_) {
    if (traj.states.empty() || traj.back().frame != frame) continue;
    const TrackState& st = traj.back();
    if (st.matched) {
      records.push_back({frame, traj.track_id, st.bbox, traj.last_confidence});
    } else if (cfg_.recovery.enabled && traj.hits >= cfg_.recovery.min_output_hits &&
               traj.miss_count <= cfg_.recovery.max_output_misses) {
      records.push_back({frame, traj.track_id, st.bbox, 0.0});
    }
  }
  std::sort(records.begin(), records.end(),
            [](const ResultRecord& a, const ResultRecord& b) { return a.track_id < b.track_id; });

  current_frame_ = frame;
  timings_.total_ms += ms_since(t_total);
  return records;
}

RunResult run_sequence(const SequenceSource& source, const TrackerConfig& cfg) {
  const DetFile det_file = parse_det_file(source.det_path);
  RunResult out;
  out.warnings = det_file.warnings;

  const int last_frame = std::max(det_file.max_frame, source.frame_count);
  Tracker tracker(cfg);
  static const std::vector<Detection> kNoDetections;
  for (int frame = 1; frame <= last_frame; ++frame) {
    const auto it = det_file.frames.find(frame);
    const std::vector<Detection>& dets = it != det_file.frames.end() ? it->second : kNoDetections;
    std::optional<FrameImage> image;
    if (cfg.appearance_enabled && source.image_dir) image = load_frame(source, frame);
    auto records = tracker.process_frame(frame, dets, image ? &*image : nullptr);
    out.records.insert(out.records.end(), records.begin(), records.end());
    ++out.frames;
  }
  out.timings = tracker.timings();
  return out;
}

}  // namespace structmot
