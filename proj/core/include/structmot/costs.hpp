#pragma once

#include <optional>
#include <span>
#include <vector>

#include "structmot/appearance.hpp"
#include "structmot/geometry.hpp"
#include "structmot/matrix.hpp"

namespace structmot {

// Mixing weights for the raw pairwise cost. motion_scale normalizes pixel
// distances into the same ballpark as the bounded appearance term.
struct CostWeights {
  double lambda_motion = 0.5;
  double lambda_appearance = 0.5;
  double motion_scale = 100.0;  // pixels
};

// Scaled distance between a predicted position and the detection center.
double motion_cost(const Point2& predicted, const Detection& detection, double motion_scale);

// Row inputs for one trajectory: its predicted location this frame and its
// appearance descriptor when one is known.
struct TrajectoryCue {
  Point2 predicted;
  const std::vector<float>* descriptor = nullptr;  // null = appearance unknown
};

// Raw cost matrix, rows = detections, cols = trajectories. Entry is the
// weighted mean of motion and appearance costs; pairs with no usable
// appearance use the motion term alone.
Matrix build_raw_cost_matrix(std::span<const Detection> detections,
                             std::span<const TrajectoryCue> trajectories,
                             const CostWeights& weights,
                             std::span<const std::optional<AppearanceDescriptor>> det_descriptors = {});

}  // namespace structmot
