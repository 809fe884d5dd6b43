#include "structmot/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "structmot/errors.hpp"

namespace structmot {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got '" + t + "'", line_no);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> parse_kv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_kv_text(ss.str());
}

const std::string* KvReader::find(const std::string& key) {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return nullptr;
  seen_.insert(key);
  return &it->second;
}

bool KvReader::get(const std::string& key, int& out) {
  const std::string* v = find(key);
  if (!v) return false;
  try {
    out = std::stoi(*v);
  } catch (const std::exception&) {
    throw DataError("config key '" + key + "': invalid integer '" + *v + "'");
  }
  return true;
}

bool KvReader::get(const std::string& key, std::uint64_t& out) {
  const std::string* v = find(key);
  if (!v) return false;
  try {
    out = std::stoull(*v);
  } catch (const std::exception&) {
    throw DataError("config key '" + key + "': invalid integer '" + *v + "'");
  }
  return true;
}

bool KvReader::get(const std::string& key, double& out) {
  const std::string* v = find(key);
  if (!v) return false;
  try {
    out = std::stod(*v);
  } catch (const std::exception&) {
    throw DataError("config key '" + key + "': invalid number '" + *v + "'");
  }
  return true;
}

bool KvReader::get(const std::string& key, bool& out) {
  const std::string* v = find(key);
  if (!v) return false;
  if (*v == "true" || *v == "1")
    out = true;
  else if (*v == "false" || *v == "0")
    out = false;
  else
    throw DataError("config key '" + key + "': expected true/false, got '" + *v + "'");
  return true;
}

bool KvReader::get(const std::string& key, std::string& out) {
  const std::string* v = find(key);
  if (!v) return false;
  out = *v;
  return true;
}

void KvReader::finish(const std::string& what) const {
  for (const auto& [key, value] : kv_)
    if (!seen_.contains(key))
      throw DataError("unknown " + what + " config key '" + key + "'");
}

TrackerConfig tracker_config_from_kv(const std::map<std::string, std::string>& kv) {
  TrackerConfig cfg;
  KvReader r(kv);
  r.get("lambda_motion", cfg.weights.lambda_motion);
  r.get("lambda_appearance", cfg.weights.lambda_appearance);
  r.get("motion_scale", cfg.weights.motion_scale);
  r.get("ar_order", cfg.motion.ar_order);
  r.get("ar_window", cfg.motion.history_window);
  r.get("phi_s", cfg.structural.phi_s);
  if (int max_set = static_cast<int>(cfg.structural.max_set_size); r.get("max_set_size", max_set)) {
    if (max_set < 0) throw DataError("max_set_size must be non-negative");
    cfg.structural.max_set_size = static_cast<std::size_t>(max_set);
  }
  r.get("gate", cfg.gate.gate);
  r.get("recovery_enabled", cfg.recovery.enabled);
  r.get("recovery_window", cfg.recovery.window);
  r.get("solver_tolerance", cfg.recovery.solver_tolerance);
  r.get("min_output_hits", cfg.recovery.min_output_hits);
  r.get("max_output_misses", cfg.recovery.max_output_misses);
  r.get("structural_enabled", cfg.structural_enabled);
  r.get("appearance_enabled", cfg.appearance_enabled);
  r.get("confidence_threshold", cfg.confidence_threshold);
  r.get("image_width", cfg.image_width);
  r.get("image_height", cfg.image_height);
  r.finish("tracker");

  if (cfg.weights.lambda_motion < 0.0 || cfg.weights.lambda_appearance < 0.0 ||
      cfg.weights.lambda_motion + cfg.weights.lambda_appearance <= 0.0)
    throw DataError("cost weights must be non-negative and sum to a positive value");
  if (cfg.gate.gate <= 0.0) throw DataError("gate must be positive");
  if (cfg.motion.ar_order < 1) throw DataError("ar_order must be >= 1");
  if (cfg.motion.history_window < cfg.motion.ar_order + 1)
    throw DataError("ar_window must be at least ar_order + 1");
  if (cfg.recovery.enabled && cfg.recovery.window < 1)
    throw DataError("recovery_window must be >= 1");
  return cfg;
}

TrackerConfig load_tracker_config(const std::filesystem::path& path) {
  return tracker_config_from_kv(parse_kv_file(path));
}

std::string dump_tracker_config(const TrackerConfig& cfg) {
  std::ostringstream out;
  char buf[256];
  out << "# tracker configuration (key=value)\n";
  out << "# motion_scale=0 and phi_s=0 derive from the image diagonal\n";
  std::snprintf(buf, sizeof(buf),
                "lambda_motion=%g\nlambda_appearance=%g\nmotion_scale=%g\n",
                cfg.weights.lambda_motion, cfg.weights.lambda_appearance,
                cfg.weights.motion_scale);
  out << buf;
  std::snprintf(buf, sizeof(buf), "ar_order=%d\nar_window=%d\n", cfg.motion.ar_order,
                cfg.motion.history_window);
  out << buf;
  std::snprintf(buf, sizeof(buf), "phi_s=%g\nmax_set_size=%zu\ngate=%g\n", cfg.structural.phi_s,
                cfg.structural.max_set_size, cfg.gate.gate);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "recovery_enabled=%s\nrecovery_window=%d\nsolver_tolerance=%g\n"
                "min_output_hits=%d\nmax_output_misses=%d\n",
                cfg.recovery.enabled ? "true" : "false", cfg.recovery.window,
                cfg.recovery.solver_tolerance, cfg.recovery.min_output_hits,
                cfg.recovery.max_output_misses);
  out << buf;
  std::snprintf(buf, sizeof(buf), "structural_enabled=%s\nappearance_enabled=%s\n",
                cfg.structural_enabled ? "true" : "false",
                cfg.appearance_enabled ? "true" : "false");
  out << buf;
  if (std::isfinite(cfg.confidence_threshold)) {
    std::snprintf(buf, sizeof(buf), "confidence_threshold=%g\n", cfg.confidence_threshold);
    out << buf;
  } else {
    out << "# confidence_threshold unset: keep all detections\n";
  }
  std::snprintf(buf, sizeof(buf), "image_width=%d\nimage_height=%d\n", cfg.image_width,
                cfg.image_height);
  out << buf;
  return out.str();
}

}  // namespace structmot
