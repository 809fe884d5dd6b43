#include "structmot/appearance.hpp"

#include <algorithm>
#include <cmath>

namespace structmot {

namespace {

// h in [0,360), s and v in [0,1].
void rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8, double& h, double& s,
                double& v) {
  const double r = r8 / 255.0, g = g8 / 255.0, b = b8 / 255.0;
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  v = mx;
  s = mx > 0.0 ? d / mx : 0.0;
  if (d <= 0.0) {
    h = 0.0;
    return;
  }
  if (mx == r)
    h = 60.0 * std::fmod((g - b) / d, 6.0);
  else if (mx == g)
    h = 60.0 * ((b - r) / d + 2.0);
  else
    h = 60.0 * ((r - g) / d + 4.0);
  if (h < 0.0) h += 360.0;
}

inline int clamp_bin(int bin, int count) { return std::min(std::max(bin, 0), count - 1); }

}  // namespace

std::optional<AppearanceDescriptor> extract_descriptor(const FrameImage& image,
                                                       const BBox& bbox) {
  if (!image.valid()) return std::nullopt;
  const int x0 = std::max(0, static_cast<int>(std::floor(bbox.left)));
  const int y0 = std::max(0, static_cast<int>(std::floor(bbox.top)));
  const int x1 = std::min(image.width, static_cast<int>(std::ceil(bbox.right())));
  const int y1 = std::min(image.height, static_cast<int>(std::ceil(bbox.bottom())));
  if (x0 >= x1 || y0 >= y1) return std::nullopt;

  AppearanceDescriptor desc;
  desc.bins.assign(AppearanceDescriptor::kBins, 0.0f);
  std::size_t total = 0;
  for (int y = y0; y < y1; ++y) {
    const std::uint8_t* row = image.rgb.data() + (static_cast<std::size_t>(y) * image.width + x0) * 3;
    for (int x = x0; x < x1; ++x, row += 3) {
      double h, s, v;
      rgb_to_hsv(row[0], row[1], row[2], h, s, v);
      const int hb = clamp_bin(static_cast<int>(h / 360.0 * AppearanceDescriptor::kHueBins),
                               AppearanceDescriptor::kHueBins);
      const int sb = clamp_bin(static_cast<int>(s * AppearanceDescriptor::kSatBins),
                               AppearanceDescriptor::kSatBins);
      const int vb = clamp_bin(static_cast<int>(v * AppearanceDescriptor::kValBins),
                               AppearanceDescriptor::kValBins);
      const int bin =
          (hb * AppearanceDescriptor::kSatBins + sb) * AppearanceDescriptor::kValBins + vb;
      desc.bins[bin] += 1.0f;
      ++total;
    }
  }
  const float inv = 1.0f / static_cast<float>(total);
  for (auto& b : desc.bins) b *= inv;
  return desc;
}

double appearance_cost(const std::vector<float>& a, const std::vector<float>& b) {
  double bc = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    bc += std::sqrt(static_cast<double>(a[i]) * static_cast<double>(b[i]));
  return std::clamp(1.0 - bc, 0.0, 1.0);
}

double appearance_cost(const AppearanceDescriptor& a, const AppearanceDescriptor& b) {
  return appearance_cost(a.bins, b.bins);
}

}  // namespace structmot
