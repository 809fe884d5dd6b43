#pragma once

#include <vector>

#include "structmot/geometry.hpp"

namespace structmot {

// Per-axis autoregressive model on frame-to-frame velocities. Falls back to
// constant velocity (order 1, coefficient 1) when the history is too short or
// the normal equations are rank-deficient, and to zero velocity when only a
// single state exists.
struct ARMotionModel {
  int order = 1;
  std::vector<double> coeffs_x;        // most recent lag first
  std::vector<double> coeffs_y;
  std::vector<Point2> velocities;      // time-ordered, at most history_window
  Point2 last_position;

  Point2 predicted_velocity() const;
};

struct MotionConfig {
  int ar_order = 2;
  int history_window = 10;  // velocity samples kept for fitting
};

// Least-squares AR(k) fit per axis over the trajectory's recent velocities.
ARMotionModel fit_ar_model(const Trajectory& trajectory, const MotionConfig& cfg);

// Last position advanced by the model's one-step velocity prediction.
Point2 predict_next_location(const ARMotionModel& model);

}  // namespace structmot
