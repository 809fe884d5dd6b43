#pragma once

#include <string>
#include <vector>

#include "structmot/io.hpp"

namespace structmot {

// CLEAR summary. MOTA = 1 - (FP + FN + IDSW) / GT; MOTP is the mean IoU of
// matched pairs, in [0, 1].
struct MetricsReport {
  bool evaluable = false;  // false when the ground truth has no considered box
  double mota = 0.0;
  double motp = 0.0;
  int mostly_tracked = 0;
  int mostly_lost = 0;
  double faf = 0.0;       // false positives per frame
  long long fp = 0;
  long long fn = 0;
  long long idsw = 0;
  long long gt_boxes = 0;
  long long matches = 0;
  int gt_tracks = 0;
  int frames = 0;
};

// Frame-by-frame CLEAR evaluation: correspondences persist while their IoU
// stays at or above the threshold, the rest are re-matched by minimum-cost
// assignment on (1 - IoU), and an identity switch is counted whenever a
// ground-truth track's matched id differs from its most recent one.
MetricsReport evaluate(const GtFile& gt, const std::vector<ResultRecord>& results,
                       double iou_threshold = 0.5);

std::string format_metrics_table(const MetricsReport& r);
std::string format_metrics_kv(const MetricsReport& r);

}  // namespace structmot
