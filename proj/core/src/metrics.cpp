#include "structmot/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "structmot/assign.hpp"

namespace structmot {

MetricsReport evaluate(const GtFile& gt, const std::vector<ResultRecord>& results,
                       double iou_threshold) {
  MetricsReport rep;

  std::map<int, std::vector<ResultRecord>> hyp_frames;
  int max_frame = gt.max_frame;
  for (const auto& r : results) {
    hyp_frames[r.frame].push_back(r);
    max_frame = std::max(max_frame, r.frame);
  }
  rep.frames = max_frame;

  std::map<std::int64_t, std::int64_t> last_match;          // gt id -> hyp id
  std::map<std::int64_t, std::pair<int, int>> coverage;     // gt id -> (span, covered)
  double iou_sum = 0.0;

  for (int frame = 1; frame <= max_frame; ++frame) {
    std::vector<GtEntry> gts;
    if (const auto it = gt.frames.find(frame); it != gt.frames.end())
      for (const auto& e : it->second)
        if (e.considered) gts.push_back(e);
    std::vector<ResultRecord> hyps;
    if (const auto it = hyp_frames.find(frame); it != hyp_frames.end()) hyps = it->second;

    rep.gt_boxes += static_cast<long long>(gts.size());
    for (const auto& g : gts) coverage[g.track_id].first += 1;

    std::vector<char> gt_used(gts.size(), 0), hyp_used(hyps.size(), 0);

    // Carry over still-valid correspondences from earlier frames.
    for (std::size_t gi = 0; gi < gts.size(); ++gi) {
      const auto it = last_match.find(gts[gi].track_id);
      if (it == last_match.end()) continue;
      for (std::size_t hi = 0; hi < hyps.size(); ++hi) {
        if (hyp_used[hi] || hyps[hi].track_id != it->second) continue;
        const double ov = iou(gts[gi].bbox, hyps[hi].bbox);
        if (ov >= iou_threshold) {
          gt_used[gi] = 1;
          hyp_used[hi] = 1;
          rep.matches += 1;
          iou_sum += ov;
          coverage[gts[gi].track_id].second += 1;
        }
        break;
      }
    }

    // Minimum-cost matching on (1 - IoU) for the remainder.
    std::vector<int> free_gt, free_hyp;
    for (std::size_t gi = 0; gi < gts.size(); ++gi)
      if (!gt_used[gi]) free_gt.push_back(static_cast<int>(gi));
    for (std::size_t hi = 0; hi < hyps.size(); ++hi)
      if (!hyp_used[hi]) free_hyp.push_back(static_cast<int>(hi));

    if (!free_gt.empty() && !free_hyp.empty()) {
      Matrix cost(free_gt.size(), free_hyp.size());
      for (std::size_t r = 0; r < free_gt.size(); ++r)
        for (std::size_t c = 0; c < free_hyp.size(); ++c)
          cost.at(r, c) = 1.0 - iou(gts[free_gt[r]].bbox, hyps[free_hyp[c]].bbox);
      const AssignmentResult am =
          solve_gated_assignment(cost, GateConfig{1.0 - iou_threshold + 1e-9});
      for (const auto& [r, c] : am.matches) {
        const auto& g = gts[free_gt[r]];
        const auto& h = hyps[free_hyp[c]];
        gt_used[free_gt[r]] = 1;
        hyp_used[free_hyp[c]] = 1;
        rep.matches += 1;
        iou_sum += iou(g.bbox, h.bbox);
        coverage[g.track_id].second += 1;
        if (const auto it = last_match.find(g.track_id);
            it != last_match.end() && it->second != h.track_id)
          rep.idsw += 1;
        last_match[g.track_id] = h.track_id;
      }
    }

    for (std::size_t gi = 0; gi < gts.size(); ++gi)
      if (!gt_used[gi]) rep.fn += 1;
    for (std::size_t hi = 0; hi < hyps.size(); ++hi)
      if (!hyp_used[hi]) rep.fp += 1;
  }

  rep.gt_tracks = static_cast<int>(coverage.size());
  for (const auto& [id, sc] : coverage) {
    const double ratio = sc.first > 0 ? static_cast<double>(sc.second) / sc.first : 0.0;
    if (ratio >= 0.8) rep.mostly_tracked += 1;
    if (ratio <= 0.2) rep.mostly_lost += 1;
  }

  rep.evaluable = rep.gt_boxes > 0;
  if (rep.evaluable)
    rep.mota = 1.0 - static_cast<double>(rep.fp + rep.fn + rep.idsw) /
                         static_cast<double>(rep.gt_boxes);
  rep.motp = rep.matches > 0 ? iou_sum / static_cast<double>(rep.matches) : 0.0;
  rep.faf = rep.frames > 0 ? static_cast<double>(rep.fp) / rep.frames : 0.0;
  return rep;
}

std::string format_metrics_table(const MetricsReport& r) {
  char buf[512];
  std::string out;
  out += "  MOTA    MOTP    MT    ML    FAF      FP      FN    IDSW      GT\n";
  std::snprintf(buf, sizeof(buf), "%6.3f  %6.3f  %4d  %4d  %5.2f  %6lld  %6lld  %6lld  %6lld\n",
                r.mota, r.motp, r.mostly_tracked, r.mostly_lost, r.faf, r.fp, r.fn, r.idsw,
                r.gt_boxes);
  out += buf;
  return out;
}

std::string format_metrics_kv(const MetricsReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "mota=%.6f\nmotp=%.6f\nmt=%d\nml=%d\nfaf=%.6f\nfp=%lld\nfn=%lld\nidsw=%lld\n"
                "gt=%lld\nmatches=%lld\ngt_tracks=%d\nframes=%d\n",
                r.mota, r.motp, r.mostly_tracked, r.mostly_lost, r.faf, r.fp, r.fn, r.idsw,
                r.gt_boxes, r.matches, r.gt_tracks, r.frames);
  return buf;
}

}  // namespace structmot
