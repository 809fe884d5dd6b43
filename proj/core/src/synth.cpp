#include "structmot/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include "structmot/config.hpp"
#include "structmot/errors.hpp"

namespace structmot {

namespace {

// Independent deterministic stream per noise source.
enum Stream : std::uint64_t { kMotion = 1, kCamera = 2, kJitter = 3, kDrop = 4, kFalse = 5 };

std::mt19937_64 sub_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4B9FDULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return std::mt19937_64(z ^ (z >> 31));
}

struct TargetState {
  Point2 base;       // world coords
  Point2 velocity;
  double box_w = 0.0, box_h = 0.0;
  // sinusoid parameters
  double amp_x = 0.0, amp_y = 0.0, period_x = 1.0, period_y = 1.0;
  double phase_x = 0.0, phase_y = 0.0;
};

std::optional<BBox> clip_to_image(const BBox& b, int w, int h) {
  const double left = std::max(0.0, b.left);
  const double top = std::max(0.0, b.top);
  const double right = std::min(static_cast<double>(w), b.right());
  const double bottom = std::min(static_cast<double>(h), b.bottom());
  if (right - left < 1e-9 || bottom - top < 1e-9) return std::nullopt;
  return BBox{left, top, right - left, bottom - top};
}

}  // namespace

ScenarioOutput generate(const ScenarioConfig& cfg) {
  ScenarioOutput out;
  auto rng_motion = sub_rng(cfg.seed, kMotion);
  auto rng_camera = sub_rng(cfg.seed, kCamera);
  auto rng_jitter = sub_rng(cfg.seed, kJitter);
  auto rng_drop = sub_rng(cfg.seed, kDrop);
  auto rng_false = sub_rng(cfg.seed, kFalse);

  const double W = cfg.image_width, H = cfg.image_height;
  const double x0 = cfg.spawn_margin * W, x1 = (1.0 - cfg.spawn_margin) * W;
  const double y0 = cfg.spawn_margin * H, y1 = (1.0 - cfg.spawn_margin) * H;

  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  std::uniform_real_distribution<double> uspeed(cfg.speed_min, cfg.speed_max);
  std::uniform_real_distribution<double> uangle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> ubw(cfg.box_width_min, cfg.box_width_max);
  std::uniform_real_distribution<double> ubh(cfg.box_height_min, cfg.box_height_max);
  std::uniform_real_distribution<double> uamp(cfg.amp_min, cfg.amp_max);
  std::uniform_real_distribution<double> uperiod(cfg.period_min, cfg.period_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> camera_step(0.0, std::max(cfg.camera_walk_sigma, 1e-12));
  std::normal_distribution<double> jitter(0.0, std::max(cfg.jitter, 1e-12));

  std::vector<TargetState> targets(cfg.target_count);
  for (auto& t : targets) {
    t.base = {ux(rng_motion), uy(rng_motion)};
    const double speed = uspeed(rng_motion);
    const double angle = uangle(rng_motion);
    t.velocity = {speed * std::cos(angle), speed * std::sin(angle)};
    t.box_w = ubw(rng_motion);
    t.box_h = ubh(rng_motion);
    if (cfg.motion == TargetMotion::kSinusoid) {
      t.amp_x = uamp(rng_motion);
      t.period_x = uperiod(rng_motion);
      t.phase_x = uangle(rng_motion);
      t.amp_y = uamp(rng_motion);
      t.period_y = uperiod(rng_motion);
      t.phase_y = uangle(rng_motion);
    }
  }

  Point2 camera{0.0, 0.0};
  for (int frame = 1; frame <= cfg.frame_count; ++frame) {
    if (frame > 1) {
      if (cfg.camera_walk_sigma > 0.0)
        camera += {camera_step(rng_camera), camera_step(rng_camera)};
      if (cfg.camera_jump > 0.0 && cfg.camera_jump_period > 0 &&
          frame % cfg.camera_jump_period == 0) {
        const double a = uangle(rng_camera);
        camera += {cfg.camera_jump * std::cos(a), cfg.camera_jump * std::sin(a)};
      }
    }
    out.camera.push_back(camera);

    std::vector<Detection>& dets = out.det_frames[frame];
    std::vector<GtEntry>& gts = out.gt_frames[frame];

    for (std::size_t k = 0; k < targets.size(); ++k) {
      TargetState& t = targets[k];
      if (frame > 1) {
        t.base += t.velocity;
        if (t.base.x < x0 || t.base.x > x1) {
          t.velocity.x = -t.velocity.x;
          t.base.x = std::clamp(t.base.x, x0, x1);
        }
        if (t.base.y < y0 || t.base.y > y1) {
          t.velocity.y = -t.velocity.y;
          t.base.y = std::clamp(t.base.y, y0, y1);
        }
      }
      Point2 world = t.base;
      if (cfg.motion == TargetMotion::kSinusoid) {
        world.x += t.amp_x * std::sin(2.0 * std::numbers::pi * frame / t.period_x + t.phase_x);
        world.y += t.amp_y * std::sin(2.0 * std::numbers::pi * frame / t.period_y + t.phase_y);
      }
      const Point2 image_center = world - camera;
      const BBox raw_box = bbox_centered_at({0, 0, t.box_w, t.box_h}, image_center);
      const auto gt_box = clip_to_image(raw_box, cfg.image_width, cfg.image_height);
      if (!gt_box) continue;
      gts.push_back({frame, static_cast<std::int64_t>(k + 1), *gt_box, true});

      // Detector sees the visible box, with center noise and random drops.
      const Point2 noisy =
          bbox_center(*gt_box) + Point2{jitter(rng_jitter), jitter(rng_jitter)};
      const bool dropped = unit(rng_drop) < cfg.fn_rate;
      if (dropped) continue;
      const auto det_box =
          clip_to_image(bbox_centered_at(*gt_box, noisy), cfg.image_width, cfg.image_height);
      if (!det_box) continue;
      Detection d;
      d.frame = frame;
      d.bbox = *det_box;
      d.confidence = 1.0;
      dets.push_back(d);
    }

    if (cfg.fp_rate > 0.0) {
      std::poisson_distribution<int> fp_count(cfg.fp_rate);
      const int n_fp = fp_count(rng_false);
      for (int i = 0; i < n_fp; ++i) {
        const Point2 c{unit(rng_false) * W, unit(rng_false) * H};
        const double bw = ubw(rng_false), bh = ubh(rng_false);
        const auto box = clip_to_image(bbox_centered_at({0, 0, bw, bh}, c), cfg.image_width,
                                       cfg.image_height);
        if (!box) continue;
        Detection d;
        d.frame = frame;
        d.bbox = *box;
        d.confidence = 1.0;
        dets.push_back(d);
      }
    }

    for (std::size_t i = 0; i < dets.size(); ++i) dets[i].detection_id = static_cast<int>(i);
    if (gts.empty()) out.gt_frames.erase(frame);
    if (dets.empty()) out.det_frames.erase(frame);
  }
  return out;
}

void write_gt_file(const std::map<int, std::vector<GtEntry>>& gt,
                   const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  char buf[160];
  for (const auto& [frame, entries] : gt) {
    for (const auto& e : entries) {
      std::snprintf(buf, sizeof(buf), "%d,%lld,%.2f,%.2f,%.2f,%.2f,%d,-1,-1,-1\n", e.frame,
                    static_cast<long long>(e.track_id), e.bbox.left, e.bbox.top, e.bbox.width,
                    e.bbox.height, e.considered ? 1 : 0);
      f << buf;
    }
  }
}

void write_det_file(const std::map<int, std::vector<Detection>>& det,
                    const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  char buf[160];
  for (const auto& [frame, entries] : det) {
    for (const auto& d : entries) {
      std::snprintf(buf, sizeof(buf), "%d,-1,%.2f,%.2f,%.2f,%.2f,%.2f,-1,-1,-1\n", d.frame,
                    d.bbox.left, d.bbox.top, d.bbox.width, d.bbox.height, d.confidence);
      f << buf;
    }
  }
}

void write_camera_file(const std::vector<Point2>& camera, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  char buf[96];
  for (std::size_t i = 0; i < camera.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.4f,%.4f\n", i + 1, camera[i].x, camera[i].y);
    f << buf;
  }
}

ScenarioConfig scenario_from_kv(const std::map<std::string, std::string>& kv) {
  ScenarioConfig cfg;
  KvReader r(kv);
  r.get("targets", cfg.target_count);
  r.get("frames", cfg.frame_count);
  r.get("width", cfg.image_width);
  r.get("height", cfg.image_height);
  std::string motion;
  if (r.get("motion", motion)) {
    if (motion == "constant")
      cfg.motion = TargetMotion::kConstantVelocity;
    else if (motion == "sinusoid")
      cfg.motion = TargetMotion::kSinusoid;
    else
      throw DataError("unknown motion '" + motion + "' (constant|sinusoid)");
  }
  r.get("speed_min", cfg.speed_min);
  r.get("speed_max", cfg.speed_max);
  r.get("amp_min", cfg.amp_min);
  r.get("amp_max", cfg.amp_max);
  r.get("period_min", cfg.period_min);
  r.get("period_max", cfg.period_max);
  r.get("camera_walk_sigma", cfg.camera_walk_sigma);
  r.get("camera_jump", cfg.camera_jump);
  r.get("camera_jump_period", cfg.camera_jump_period);
  r.get("jitter", cfg.jitter);
  r.get("fp_rate", cfg.fp_rate);
  r.get("fn_rate", cfg.fn_rate);
  std::string appearance;
  if (r.get("appearance", appearance)) {
    if (appearance == "identical")
      cfg.identical_appearance = true;
    else if (appearance == "distinct")
      cfg.identical_appearance = false;
    else
      throw DataError("unknown appearance '" + appearance + "' (identical|distinct)");
  }
  r.get("seed", cfg.seed);
  r.get("box_width_min", cfg.box_width_min);
  r.get("box_width_max", cfg.box_width_max);
  r.get("box_height_min", cfg.box_height_min);
  r.get("box_height_max", cfg.box_height_max);
  r.get("spawn_margin", cfg.spawn_margin);
  r.finish("scenario");
  if (cfg.target_count < 1 || cfg.frame_count < 1)
    throw DataError("scenario needs at least one target and one frame");
  if (cfg.fp_rate < 0.0 || cfg.fn_rate < 0.0 || cfg.fn_rate > 1.0)
    throw DataError("fp_rate must be >= 0 and fn_rate in [0,1]");
  return cfg;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
  return scenario_from_kv(parse_kv_file(path));
}

}  // namespace structmot
