#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace structmot {

// Image-space coordinates: top-left origin, y grows downward, real-valued pixels.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2& operator+=(const Point2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  bool operator==(const Point2& o) const = default;
};

inline double squared_norm(const Point2& p) { return p.x * p.x + p.y * p.y; }

inline double euclidean_distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned box, (left, top) corner plus size. Width and height must be positive.
struct BBox {
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;

  double right() const { return left + width; }
  double bottom() const { return top + height; }
  double area() const { return width * height; }
  bool valid() const { return width > 0.0 && height > 0.0; }
  bool operator==(const BBox& o) const = default;
};

inline Point2 bbox_center(const BBox& b) {
  return {b.left + b.width / 2.0, b.top + b.height / 2.0};
}

inline BBox bbox_centered_at(const BBox& b, const Point2& center) {
  return {center.x - b.width / 2.0, center.y - b.height / 2.0, b.width, b.height};
}

inline double iou(const BBox& a, const BBox& b) {
  const double ix = std::max(0.0, std::min(a.right(), b.right()) - std::max(a.left, b.left));
  const double iy = std::max(0.0, std::min(a.bottom(), b.bottom()) - std::max(a.top, b.top));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

// One bounding-box observation in one frame, not yet bound to an identity.
struct Detection {
  int frame = 0;           // 1-based frame index
  BBox bbox;
  double confidence = 0.0;
  int detection_id = 0;    // ordinal within the frame

  Point2 center() const { return bbox_center(bbox); }
};

// State of one identified target at one frame; matched=false marks a predicted
// (unobserved) state.
struct TrackState {
  std::int64_t track_id = 0;
  Point2 center;
  BBox bbox;
  int frame = 0;
  bool matched = true;
};

// Time-ordered state history of a single identity. miss_count equals the length
// of the trailing run of matched=false states.
struct Trajectory {
  std::int64_t track_id = 0;
  std::vector<TrackState> states;
  int miss_count = 0;

  // bookkeeping used by the tracker
  int hits = 0;                       // total matched states
  double last_confidence = 0.0;
  std::vector<float> descriptor;      // appearance histogram, empty if unknown

  const TrackState& back() const { return states.back(); }
  Point2 last_center() const { return states.back().center; }
  int last_frame() const { return states.empty() ? 0 : states.back().frame; }
};

}  // namespace structmot
