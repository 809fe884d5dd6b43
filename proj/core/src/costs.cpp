#include "structmot/costs.hpp"

namespace structmot {

double motion_cost(const Point2& predicted, const Detection& detection, double motion_scale) {
  return euclidean_distance(predicted, detection.center()) / motion_scale;
}

Matrix build_raw_cost_matrix(std::span<const Detection> detections,
                             std::span<const TrajectoryCue> trajectories,
                             const CostWeights& weights,
                             std::span<const std::optional<AppearanceDescriptor>> det_descriptors) {
  Matrix out(detections.size(), trajectories.size());
  const double lm = weights.lambda_motion;
  const double la = weights.lambda_appearance;
  for (std::size_t i = 0; i < detections.size(); ++i) {
    const AppearanceDescriptor* det_desc =
        (i < det_descriptors.size() && det_descriptors[i]) ? &*det_descriptors[i] : nullptr;
    for (std::size_t j = 0; j < trajectories.size(); ++j) {
      const double mc = motion_cost(trajectories[j].predicted, detections[i], weights.motion_scale);
      const bool have_app = det_desc != nullptr && trajectories[j].descriptor != nullptr &&
                            !trajectories[j].descriptor->empty() && la > 0.0;
      if (have_app) {
        const double ac = appearance_cost(det_desc->bins, *trajectories[j].descriptor);
        out.at(i, j) = (lm * mc + la * ac) / (lm + la);
      } else {
        out.at(i, j) = mc;
      }
    }
  }
  return out;
}

}  // namespace structmot
