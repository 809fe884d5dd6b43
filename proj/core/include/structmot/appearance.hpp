#pragma once

#include <optional>
#include <vector>

#include "structmot/geometry.hpp"
#include "structmot/image.hpp"

namespace structmot {

// Normalized HSV color histogram, 8x8x4 = 256 bins, bins sum to 1.
struct AppearanceDescriptor {
  static constexpr int kHueBins = 8;
  static constexpr int kSatBins = 8;
  static constexpr int kValBins = 4;
  static constexpr int kBins = kHueBins * kSatBins * kValBins;

  std::vector<float> bins;  // size kBins
};

// Histogram over the pixels of `bbox` clipped to the image. Returns nullopt
// when the clipped region is empty, which callers treat as "appearance
// unavailable".
std::optional<AppearanceDescriptor> extract_descriptor(const FrameImage& image, const BBox& bbox);

// Bhattacharyya distance 1 - sum(sqrt(a_i * b_i)), in [0, 1]; 0 iff equal.
double appearance_cost(const AppearanceDescriptor& a, const AppearanceDescriptor& b);
double appearance_cost(const std::vector<float>& a, const std::vector<float>& b);

}  // namespace structmot
