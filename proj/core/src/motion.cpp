#include "structmot/motion.hpp"

#include <Eigen/Dense>

namespace structmot {

namespace {

// Fits v_t = sum_l a_l * v_{t-l} by least squares. Returns empty when the
// system is underdetermined or rank-deficient.
std::vector<double> fit_axis(const std::vector<double>& v, int k) {
  const int samples = static_cast<int>(v.size());
  const int rows = samples - k;
  if (rows < k) return {};
  Eigen::MatrixXd a(rows, k);
  Eigen::VectorXd b(rows);
  for (int r = 0; r < rows; ++r) {
    b(r) = v[r + k];
    for (int l = 0; l < k; ++l) a(r, l) = v[r + k - 1 - l];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < k) return {};
  const Eigen::VectorXd x = qr.solve(b);
  return {x.data(), x.data() + k};
}

}  // namespace

Point2 ARMotionModel::predicted_velocity() const {
  if (velocities.empty()) return {0.0, 0.0};
  const int k = order;
  const int n = static_cast<int>(velocities.size());
  Point2 v;
  for (int l = 0; l < k && l < n; ++l) {
    const Point2& past = velocities[n - 1 - l];
    v.x += coeffs_x[l] * past.x;
    v.y += coeffs_y[l] * past.y;
  }
  return v;
}

ARMotionModel fit_ar_model(const Trajectory& trajectory, const MotionConfig& cfg) {
  ARMotionModel model;
  const auto& states = trajectory.states;
  model.last_position = states.empty() ? Point2{} : states.back().center;
  if (states.size() < 2) {
    // Single state: zero-velocity model, prediction stays put.
    model.order = 1;
    model.coeffs_x = {1.0};
    model.coeffs_y = {1.0};
    return model;
  }

  const int first =
      std::max(0, static_cast<int>(states.size()) - 1 - cfg.history_window);
  for (int i = first + 1; i < static_cast<int>(states.size()); ++i)
    model.velocities.push_back(states[i].center - states[i - 1].center);

  const int samples = static_cast<int>(model.velocities.size());
  if (samples >= cfg.ar_order + 1) {
    std::vector<double> vx(samples), vy(samples);
    for (int i = 0; i < samples; ++i) {
      vx[i] = model.velocities[i].x;
      vy[i] = model.velocities[i].y;
    }
    auto cx = fit_axis(vx, cfg.ar_order);
    auto cy = fit_axis(vy, cfg.ar_order);
    if (!cx.empty() && !cy.empty()) {
      model.order = cfg.ar_order;
      model.coeffs_x = std::move(cx);
      model.coeffs_y = std::move(cy);
      return model;
    }
  }
  // Constant velocity: repeat the last observed velocity.
  model.order = 1;
  model.coeffs_x = {1.0};
  model.coeffs_y = {1.0};
  return model;
}

Point2 predict_next_location(const ARMotionModel& model) {
  return model.last_position + model.predicted_velocity();
}

}  // namespace structmot
